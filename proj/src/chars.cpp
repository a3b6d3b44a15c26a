#include "fermat/chars.hpp"

#include <stdexcept>
#include <vector>

namespace fermat {

namespace {

void require_spec(const DiffSpaceSpec& spec) {
  if (spec.n < 4) throw std::invalid_argument("Fermat exponent must be >= 4");
  if (spec.m < 0) throw std::invalid_argument("tensor power must be >= 0");
}

// Trace of the monomial space indexed by E_M, shifted by m in both coordinates.
Cyclo triangle_trace(int n, std::int64_t M, std::int64_t m, const GroupElement& g) {
  const std::int64_t a = g.alpha;
  const std::int64_t b = g.beta;
  const std::int64_t sign = (m % 2 == 0) ? 1 : -1;
  if (M < 0) return Cyclo(n);

  switch (g.perm) {
    case Perm::identity: {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
      // Collapse each coordinate to its residue class first.
      for (std::int64_t i = 0; i <= M; ++i) {
        const std::int64_t rows = M - i + 1;
        const std::int64_t ei = a * (i + m);
        for (std::int64_t rj = 0; rj < n && rj < rows; ++rj) {
          const std::int64_t reps = (rows - 1 - rj) / n + 1;
          counts[static_cast<std::size_t>(residue(ei + b * (rj + m), n))] += reps;
        }
      }
      return Cyclo::from_exponent_counts(n, std::span<const std::int64_t>(counts));
    }
    case Perm::s:
    case Perm::s2: {
      // The unique candidate fixed monomial sits at i = j = M/3; it exists iff 3 | M,
      // and then i + m = (M + 3m)/3 is the exponent shift.
      if (M % 3 != 0) return Cyclo(n);
      return Cyclo::root_power(n, (a + b) * ((M + 3 * m) / 3));
    }
    case Perm::t:
    case Perm::ts:
    case Perm::st: {
      std::int64_t coef = 0;
      if (g.perm == Perm::t) coef = a - 2 * b;
      else if (g.perm == Perm::ts) coef = a + b;
      else coef = b - 2 * a;
      std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
      for (std::int64_t i = 0; i <= floor_div(M, 2); ++i) counts[static_cast<std::size_t>(residue(coef * (i + m), n))] += sign;
      return Cyclo::from_exponent_counts(n, std::span<const std::int64_t>(counts));
    }
  }
  throw std::logic_error("unhandled S_3 element");
}

}  // namespace

std::int64_t genus(int n) { return static_cast<std::int64_t>(n - 1) * (n - 2) / 2; }

std::int64_t triangle_size(std::int64_t M) { return M < 0 ? 0 : (M + 1) * (M + 2) / 2; }

std::int64_t dim_Vm(const DiffSpaceSpec& spec) {
  require_spec(spec);
  if (spec.m == 0) return 1;
  if (spec.m == 1) return genus(spec.n);
  return (2 * spec.m - 1) * spec.n * (spec.n - 3) / 2;
}

Cyclo char_Wm(const DiffSpaceSpec& spec, const GroupElement& g) {
  require_spec(spec);
  if (spec.m < 1) throw std::invalid_argument("char_Wm requires m >= 1");
  const int n = spec.n;
  const std::int64_t m = spec.m;
  // s-row: 3 | m(n-3) iff 3 | n or 3 | m, value zeta^{(alpha+beta) mn/3}.
  return triangle_trace(n, m * (n - 3), m, g);
}

Cyclo char_Im(const DiffSpaceSpec& spec, const GroupElement& g) {
  require_spec(spec);
  const int n = spec.n;
  const std::int64_t m = spec.m;
  if (m < 2) return Cyclo(n);
  const std::int64_t M = m * (n - 3) - n;
  if ((g.perm == Perm::s || g.perm == Perm::s2) && M >= 0 && M % 3 == 0) {
    // 3 | M  <=>  3 | n(m-1); the exponent n(m-1)/3 is then integral.
    if ((n * (m - 1)) % 3 != 0) throw std::logic_error("non-integral exponent n(m-1)/3");
  }
  return triangle_trace(n, M, m, g);
}

Cyclo char_Vm(const DiffSpaceSpec& spec, const GroupElement& g) {
  require_spec(spec);
  if (spec.m == 0) return Cyclo(spec.n, 1);
  if (spec.m == 1) return char_Wm(spec, g);
  return char_Wm(spec, g) - char_Im(spec, g);
}

}  // namespace fermat
