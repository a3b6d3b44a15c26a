#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the ring of cyclotomic integers Z[zeta_n].
 *
 * Elements are stored as integer polynomials in zeta of degree < phi(n),
 * reduced modulo the n-th cyclotomic polynomial. This representation is
 * canonical, so equality is coefficient-wise equality.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermat/numeric.hpp"

namespace fermat {

/// The modulus Phi_n(x) of the canonical representation (ascending coefficients).
struct CycloPolyBasis {
  int n = 1;
  std::vector<Integer> phi;

  int degree() const { return static_cast<int>(phi.size()) - 1; }
};

/// Phi_n by exact division of x^n - 1 by Phi_d over the proper divisors d of n.
CycloPolyBasis cyclotomic_polynomial(int n);

int euler_phi(int n);

namespace detail {
struct CycloRing;
}

class Cyclo {
 public:
  /// Zero of Z[zeta_n].
  explicit Cyclo(int n);
  Cyclo(int n, const Integer& value);

  /// zeta^(k mod n).
  static Cyclo root_power(int n, std::int64_t k);

  /// sum_k counts[k] * zeta^k; counts has length n.
  static Cyclo from_exponent_counts(int n, std::span<const Integer> counts);
  static Cyclo from_exponent_counts(int n, std::span<const std::int64_t> counts);

  int order() const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclo conj() const;

  /// The rational integer this element equals, or nullopt when it is not in Z.
  std::optional<Integer> as_integer() const;

  bool is_zero() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  std::string to_string() const;

 private:
  Cyclo(std::shared_ptr<const detail::CycloRing> ring, std::vector<Integer> coeffs);
  void check_same_ring(const Cyclo& other) const;

  std::shared_ptr<const detail::CycloRing> ring_;
  std::vector<Integer> coeffs_;
};

}  // namespace fermat
