#include "fermat/series.hpp"

#include <sstream>
#include <stdexcept>

#include "fermat/decompose.hpp"
#include "fermat/lattice.hpp"

namespace fermat {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::one_minus_power(int k) { return constant(1) - monomial(1, k); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs_.begin(), a.coeffs_.end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return Rational(1) / a.leading() * a;
}

namespace {

void write_term(std::ostringstream& os, const Rational& c, int k, bool first) {
  if (c == 0) return;
  const Rational mag = abs(c);
  if (c < 0) os << "-";
  else if (!first) os << "+";
  const bool unit = mag == 1;
  if (k == 0 || !unit) {
    if (mag.get_den() == 1) os << mag.get_num();
    else os << "(" << mag << ")";
  }
  if (k > 0) {
    os << "t";
    if (k > 1) os << "^" << k;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    write_term(os, c, k, first);
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  num_ = Polynomial::divmod(num_, g).first;
  den_ = Polynomial::divmod(den_, g).first;

  // Scale so that den has integer coefficients, content 1, positive leading coefficient.
  Integer lcm_den = 1;
  for (const auto& c : den_.coeffs()) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  Integer content = 0;
  for (const auto& c : den_.coeffs()) content = gcd(content, Integer(c.get_num() * (lcm_den / c.get_den())));
  Rational scale(lcm_den, content);
  if (den_.leading() < 0) scale = -scale;
  scale.canonicalize();
  num_ = scale * num_;
  den_ = scale * den_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator*(const Rational& c, const RationalFunction& f) {
  return RationalFunction(c * f.num_, f.den_);
}

std::pair<std::vector<Integer>, std::vector<Integer>> RationalFunction::integer_form() const {
  Integer scale = 1;
  for (const auto& c : num_.coeffs()) scale = lcm(scale, Integer(c.get_den()));
  Integer content = 0;
  std::vector<Integer> num;
  std::vector<Integer> den;
  for (const auto& c : num_.coeffs()) num.push_back(Integer(c.get_num() * (scale / c.get_den())));
  for (const auto& c : den_.coeffs()) den.push_back(Integer(c.get_num() * scale));
  for (const auto& z : num) content = gcd(content, z);
  for (const auto& z : den) content = gcd(content, z);
  for (auto& z : num) z /= content;
  for (auto& z : den) z /= content;
  return {num, den};
}

RationalFunction RationalFunction::from_integer_form(std::span<const Integer> num, std::span<const Integer> den) {
  return RationalFunction(Polynomial(std::vector<Rational>(num.begin(), num.end())),
                          Polynomial(std::vector<Rational>(den.begin(), den.end())));
}

std::string RationalFunction::to_string() const {
  auto [num, den] = integer_form();
  auto as_poly = [](const std::vector<Integer>& v) {
    return Polynomial(std::vector<Rational>(v.begin(), v.end())).to_string();
  };
  return "(" + as_poly(num) + ")/(" + as_poly(den) + ")";
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

std::vector<Rational> taylor(const RationalFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("taylor: negative order");
  const Rational d0 = f.den().coefficient(0);
  if (d0 == 0) throw std::domain_error("taylor: denominator vanishes at t = 0");
  std::vector<Rational> out(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i <= k; ++i) {
    Rational acc = f.num().coefficient(i);
    for (int j = 1; j <= i && j <= f.den().degree(); ++j) acc -= f.den().coefficient(j) * out[static_cast<std::size_t>(i - j)];
    out[static_cast<std::size_t>(i)] = acc / d0;
  }
  return out;
}

namespace {

Rational closed_A(int n, std::int64_t m, const IrrepLabel& label) { return coeffs(n, m, label).A; }
Rational closed_B(int n, std::int64_t m, const IrrepLabel& label) { return coeffs(n, m, label).B; }

// Smallest m >= 1 from which every branch of the closed form is in its periodic regime.
int periodic_start(int n) {
  int m = 1;
  while (static_cast<std::int64_t>(m) * (n - 3) < n) ++m;
  return m;
}

}  // namespace

CorrectionPolys correction_polys(int n, const IrrepLabel& label) {
  std::vector<Rational> f(static_cast<std::size_t>(n));
  std::vector<Rational> ga(static_cast<std::size_t>(n));
  std::vector<Rational> gb(static_cast<std::size_t>(2 * n));
  for (int m = 0; m < n; ++m) {
    f[static_cast<std::size_t>(m)] = ceil_div(3 * m - 1, n);
    ga[static_cast<std::size_t>(m)] = closed_A(n, m + n, label);
  }
  for (int m = 0; m < 2 * n; ++m) gb[static_cast<std::size_t>(m)] = closed_B(n, m + 2 * n, label);

  RationalFunction gamma;
  if (label.orbit == OrbitClass::fully_fixed) {
    const Rational sign = label.rho == Rho::stan ? -1 : 1;
    gamma = RationalFunction(sign * (Polynomial::monomial(1, label.nu) - Polynomial::monomial(1, label.nu + 1)),
                             Polynomial::one_minus_power(3));
  }
  return {Polynomial(std::move(f)), Polynomial(std::move(ga)), Polynomial(std::move(gb)), gamma};
}

RationalFunction periodic_series(int n, const IrrepLabel& label) {
  const CorrectionPolys parts = correction_polys(n, label);
  const Rational d6(irrep_degree(label), 6);
  const RationalFunction one_minus_t(Polynomial::one_minus_power(1));
  const RationalFunction one_minus_tn(Polynomial::one_minus_power(n));

  // sum m t^m
  const RationalFunction linear(Polynomial::monomial(1, 1), Polynomial::one_minus_power(1) * Polynomial::one_minus_power(1));
  // sum ceil((3m-1)/n) t^m = (3t^n/(1-t) + F)/(1-t^n)
  const RationalFunction ceilings =
      (RationalFunction(Polynomial::monomial(3, n)) / one_minus_t + RationalFunction(parts.F)) / one_minus_tn;
  // sum A^{(m)} t^m over the period n, sum B^{(m)} t^m over the period 2n
  const RationalFunction a_part = RationalFunction(parts.G_A) / one_minus_tn;
  const RationalFunction b_part(parts.G_B, Polynomial::one_minus_power(2 * n));

  return d6 * (linear - ceilings + a_part) + Rational(1, 2) * b_part + Rational(1, 3) * parts.G_Gamma;
}

RationalFunction isotypic_series(int n, const IrrepLabel& label) {
  const RationalFunction periodic = periodic_series(n, label);
  // The closed forms leave their periodic regime only for m < periodic_start(n)
  // (and m = 0, where V_0 is the trivial module); patch those coefficients.
  const int start = periodic_start(n);
  const std::vector<Rational> expansion = taylor(periodic, start - 1);
  std::vector<Rational> patch(static_cast<std::size_t>(start), 0);
  for (int m = 0; m < start; ++m) {
    patch[static_cast<std::size_t>(m)] = Rational(multiplicity(n, m, label)) - expansion[static_cast<std::size_t>(m)];
  }
  return periodic + RationalFunction(Polynomial(std::move(patch)));
}

RationalFunction total_series(int n, bool weighted) {
  RationalFunction total;
  for (const IrrepLabel& label : list_irreps(n)) {
    const RationalFunction h = isotypic_series(n, label);
    total = total + (weighted ? Rational(irrep_degree(label)) * h : h);
  }
  return total;
}

}  // namespace fermat
