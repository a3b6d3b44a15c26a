#pragma once

/**
 * @file series.hpp
 * @brief Exact univariate rational functions over Q and the equivariant
 *        Hilbert series of the canonical ring of F_n.
 */

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fermat/group.hpp"
#include "fermat/numeric.hpp"

namespace fermat {

/// Dense polynomial in t with rational coefficients, ascending degree, no trailing zeros.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// 1 - t^k
  static Polynomial one_minus_power(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Descending-degree text such as "t^3+8t^2+8t+1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// num/den in lowest terms; den has integer coefficients of content 1 and a
/// positive leading coefficient. Equality is equality of canonical forms.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rational& c, const RationalFunction& f);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// Numerator and denominator scaled by a common factor to coprime-content integer vectors (ascending).
  std::pair<std::vector<Integer>, std::vector<Integer>> integer_form() const;
  static RationalFunction from_integer_form(std::span<const Integer> num, std::span<const Integer> den);

  /// "(num)/(den)" using the integer form, e.g. "(t^3+8t^2+8t+1)/(t^2-2t+1)".
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

/// First k+1 power-series coefficients at t = 0. Throws std::domain_error if den(0) = 0.
std::vector<Rational> taylor(const RationalFunction& f, int k);

/// The finite building blocks of an isotypic series.
struct CorrectionPolys {
  Polynomial F;      ///< sum_{m<n} ceil((3m-1)/n) t^m
  Polynomial G_A;    ///< sum_{m<n} A^{(m+n)} t^m
  Polynomial G_B;    ///< sum_{m<2n} B^{(m+2n)} t^m
  RationalFunction G_Gamma;  ///< +-(t^nu - t^{nu+1})/(1 - t^3) for fully fixed labels, else 0
};

CorrectionPolys correction_polys(int n, const IrrepLabel& label);

/// The quasi-polynomial part of the series: every coefficient equals the
/// closed-form multiplicity once m(n-3) >= n.
RationalFunction periodic_series(int n, const IrrepLabel& label);

/// sum_m multiplicity(n, m, label) t^m.
RationalFunction isotypic_series(int n, const IrrepLabel& label);

/// sum over labels of deg * H (weighted, the Hilbert series of dimensions) or of H.
RationalFunction total_series(int n, bool weighted);

}  // namespace fermat
