#include "fermat/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace fermat {

namespace {

void require_curve(int n, std::int64_t m) {
  if (n < 4) throw std::invalid_argument("band sums require n >= 4");
  if (m < 1) throw std::invalid_argument("band sums require m >= 1");
}

}  // namespace

std::int64_t count_triangle(const TriangleQuery& q) {
  std::int64_t count = 0;
  const std::int64_t ti = residue(-q.X, q.n);
  const std::int64_t tj = residue(-q.Y, q.n);
  for (std::int64_t i = 0; i <= q.M; ++i) {
    if (residue(i, q.n) != ti) continue;
    for (std::int64_t j = 0; i + j <= q.M; ++j) {
      if (residue(j, q.n) == tj) ++count;
    }
  }
  return count;
}

std::int64_t count_half_range(std::int64_t M, int n, std::int64_t X) {
  if (M < 0) return 0;
  const std::int64_t target = residue(-X, n);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= floor_div(M, 2); ++i) {
    if (residue(i, n) == target) ++count;
  }
  return count;
}

std::int64_t triangle_sum(const TriangleQuery& q) {
  return static_cast<std::int64_t>(q.n) * q.n * count_triangle(q);
}

Cyclo triangle_sum_direct(const TriangleQuery& q) {
  const int n = q.n;
  std::vector<Integer> counts(static_cast<std::size_t>(n), 0);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t i = 0; i <= q.M; ++i) {
        for (std::int64_t j = 0; i + j <= q.M; ++j) {
          counts[static_cast<std::size_t>(residue(a * (i + q.X) + b * (j + q.Y), n))] += 1;
        }
      }
    }
  }
  return Cyclo::from_exponent_counts(n, std::span<const Integer>(counts));
}

std::int64_t half_range_sum(std::int64_t M, int n, std::int64_t X) {
  return static_cast<std::int64_t>(n) * n * count_half_range(M, n, X);
}

Cyclo half_range_sum_direct(std::int64_t M, int n, std::int64_t X, int form) {
  std::vector<Integer> counts(static_cast<std::size_t>(n), 0);
  if (M >= 0) {
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        std::int64_t coef = 0;
        switch (form) {
          case 0: coef = a + b; break;
          case 1: coef = a - 2 * b; break;
          case 2: coef = b - 2 * a; break;
          default: throw std::invalid_argument("linear form selector must be 0, 1 or 2");
        }
        for (std::int64_t i = 0; i <= floor_div(M, 2); ++i) {
          counts[static_cast<std::size_t>(residue(coef * (i + X), n))] += 1;
        }
      }
    }
  }
  return Cyclo::from_exponent_counts(n, std::span<const Integer>(counts));
}

std::int64_t band_base(int n, std::int64_t m) { return m - ceil_div(3 * m - 1, n); }

int triangle_correction(int n, std::int64_t m, std::int64_t X, std::int64_t Y) {
  require_curve(n, m);
  const std::int64_t M = m * (n - 3);
  const std::int64_t vx = residue(-X, n);
  const std::int64_t vy = residue(-Y, n);
  if (M + 1 < n) {
    // E_{M-n} is empty and the whole triangle fits in one period.
    return vx + vy <= residue(-3 * m, n) ? 1 : 0;
  }
  // E_M \ E_{M-n} splits into a parallelogram (one j-solution per admissible i)
  // and a corner triangle of side n holding at most one solution.
  const std::int64_t r = residue(1 - 3 * m, n);  // = v_{M+1}
  if (vx >= r) return vx - r + vy >= n ? -1 : 0;
  return vx - r + vy < 0 ? 1 : 0;
}

std::int64_t triangle_difference(int n, std::int64_t m, std::int64_t X, std::int64_t Y) {
  return static_cast<std::int64_t>(n) * n * (band_base(n, m) + triangle_correction(n, m, X, Y));
}

int half_range_difference(int n, std::int64_t m, std::int64_t X) {
  require_curve(n, m);
  const std::int64_t M = m * (n - 3);
  const std::int64_t v = residue(-X, n);
  // Solutions of i = v mod n in [lo, hi] number floor((hi-v)/n) - ceil((lo-v)/n) + 1.
  const std::int64_t hi = floor_div(M, 2);
  const std::int64_t upper = floor_div(hi - v, n);
  if (M + 1 < n) return static_cast<int>(upper + 1);
  const std::int64_t lo = floor_div(M - n, 2) + 1;
  return static_cast<int>(upper - ceil_div(lo - v, n) + 1);
}

}  // namespace fermat
