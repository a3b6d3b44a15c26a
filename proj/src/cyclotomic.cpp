#include "fermat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fermat {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact quotient of a by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_exact_div(IntPoly a, const IntPoly& monic) {
  const std::size_t db = monic.size() - 1;
  if (a.size() < monic.size()) throw std::logic_error("cyclotomic division: degree too small");
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const Integer c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * monic[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloPolyBasis cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  IntPoly xn_minus_1(static_cast<std::size_t>(n) + 1, 0);
  xn_minus_1[0] = -1;
  xn_minus_1[static_cast<std::size_t>(n)] = 1;
  if (n == 1) return {1, xn_minus_1};

  IntPoly divisor{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d).phi);
  }
  return {n, poly_exact_div(xn_minus_1, divisor)};
}

namespace detail {

struct CycloRing {
  int n;
  int dim;
  // x^k mod Phi_n for k in [0, n), each of length dim.
  std::vector<std::vector<std::int64_t>> power_table;

  explicit CycloRing(int order) : n(order) {
    const CycloPolyBasis basis = cyclotomic_polynomial(n);
    dim = basis.degree();
    power_table.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    std::vector<Integer> cur(static_cast<std::size_t>(dim), 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < dim; ++j) power_table[k][j] = to_int64(cur[j]);
      // cur <- x * cur mod Phi_n
      Integer top = cur[static_cast<std::size_t>(dim) - 1];
      for (int j = dim - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int j = 0; j < dim; ++j) cur[j] -= top * basis.phi[j];
      }
    }
  }

  std::vector<Integer> reduce(std::span<const Integer> counts) const {
    std::vector<Integer> out(static_cast<std::size_t>(dim), 0);
    for (int k = 0; k < n; ++k) {
      const Integer& c = counts[k];
      if (c == 0) continue;
      const auto& row = power_table[k];
      for (int j = 0; j < dim; ++j) {
        if (row[j] != 0) out[j] += c * row[j];
      }
    }
    return out;
  }
};

std::shared_ptr<const CycloRing> ring_for(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic ring order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycloRing>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_shared<const CycloRing>(n)).first;
  return it->second;
}

}  // namespace detail

Cyclo::Cyclo(std::shared_ptr<const detail::CycloRing> ring, std::vector<Integer> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

Cyclo::Cyclo(int n) : ring_(detail::ring_for(n)), coeffs_(static_cast<std::size_t>(ring_->dim), 0) {}

Cyclo::Cyclo(int n, const Integer& value) : Cyclo(n) { coeffs_[0] = value; }

Cyclo Cyclo::root_power(int n, std::int64_t k) {
  auto ring = detail::ring_for(n);
  const auto& row = ring->power_table[static_cast<std::size_t>(residue(k, n))];
  std::vector<Integer> coeffs(row.begin(), row.end());
  return Cyclo(std::move(ring), std::move(coeffs));
}

Cyclo Cyclo::from_exponent_counts(int n, std::span<const Integer> counts) {
  if (counts.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("exponent counts must have length n");
  auto ring = detail::ring_for(n);
  auto coeffs = ring->reduce(counts);
  return Cyclo(std::move(ring), std::move(coeffs));
}

Cyclo Cyclo::from_exponent_counts(int n, std::span<const std::int64_t> counts) {
  std::vector<Integer> big(counts.begin(), counts.end());
  return from_exponent_counts(n, std::span<const Integer>(big));
}

int Cyclo::order() const { return ring_->n; }

void Cyclo::check_same_ring(const Cyclo& other) const {
  if (ring_->n != other.ring_->n) {
    throw std::invalid_argument("cyclotomic operands of different orders: " + std::to_string(ring_->n) +
                                " vs " + std::to_string(other.ring_->n));
  }
}

Cyclo Cyclo::conj() const {
  const int n = ring_->n;
  std::vector<Integer> counts(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < ring_->dim; ++j) counts[static_cast<std::size_t>(residue(-j, n))] += coeffs_[j];
  return Cyclo(ring_, ring_->reduce(counts));
}

std::optional<Integer> Cyclo::as_integer() const {
  for (int j = 1; j < ring_->dim; ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  check_same_ring(other);
  for (int j = 0; j < ring_->dim; ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  check_same_ring(other);
  for (int j = 0; j < ring_->dim; ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& other) {
  check_same_ring(other);
  const int n = ring_->n;
  const int dim = ring_->dim;
  std::vector<Integer> counts(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < dim; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (other.coeffs_[j] == 0) continue;
      counts[static_cast<std::size_t>((i + j) % n)] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = ring_->reduce(counts);
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  return a.ring_->n == b.ring_->n && a.coeffs_ == b.coeffs_;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < ring_->dim; ++j) {
    const Integer& c = coeffs_[j];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Integer mag = abs(c);
    if (j == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fermat
