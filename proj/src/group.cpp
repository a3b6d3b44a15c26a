#include "fermat/group.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace fermat {

namespace {

// Each S_3 element permutes the index triple (i, j, k), k = M - i - j, of the
// monomial basis: the image triple is (v[p[0]], v[p[1]], v[p[2]]).
using SlotMap = std::array<int, 3>;

constexpr SlotMap slot_map(Perm x) {
  switch (x) {
    case Perm::identity: return {0, 1, 2};
    case Perm::s: return {2, 0, 1};
    case Perm::s2: return {1, 2, 0};
    case Perm::t: return {2, 1, 0};
    case Perm::ts: return {1, 0, 2};
    case Perm::st: return {0, 2, 1};
  }
  return {0, 1, 2};
}

Perm perm_from_slot_map(const SlotMap& p) {
  for (Perm x : kAllPerms) {
    if (slot_map(x) == p) return x;
  }
  throw std::logic_error("not an S_3 slot map");
}

}  // namespace

Perm perm_multiply(Perm x, Perm y) {
  // (x*y)(v) = x(y(v)): the composite picks slot y[x[a]].
  const SlotMap px = slot_map(x);
  const SlotMap py = slot_map(y);
  return perm_from_slot_map({py[px[0]], py[px[1]], py[px[2]]});
}

Perm perm_inverse(Perm x) {
  for (Perm y : kAllPerms) {
    if (perm_multiply(x, y) == Perm::identity) return y;
  }
  throw std::logic_error("S_3 element without inverse");
}

int perm_sign(Perm x) {
  return (x == Perm::t || x == Perm::ts || x == Perm::st) ? -1 : 1;
}

std::string to_string(Perm x) {
  switch (x) {
    case Perm::identity: return "1";
    case Perm::s: return "s";
    case Perm::s2: return "s^2";
    case Perm::t: return "t";
    case Perm::ts: return "ts";
    case Perm::st: return "st";
  }
  return "?";
}

std::pair<int, int> conjugate_translation(int n, Perm g, std::int64_t alpha, std::int64_t beta) {
  std::int64_t a = alpha;
  std::int64_t b = beta;
  switch (g) {
    case Perm::identity: break;
    case Perm::s: a = beta - alpha; b = -alpha; break;
    case Perm::s2: a = -beta; b = alpha - beta; break;
    case Perm::t: a = -alpha; b = beta - alpha; break;
    case Perm::ts: a = beta; b = alpha; break;
    case Perm::st: a = alpha - beta; b = -beta; break;
  }
  return {static_cast<int>(residue(a, n)), static_cast<int>(residue(b, n))};
}

std::pair<int, int> s3_action_on_character(int n, Perm g, std::int64_t kappa, std::int64_t lambda) {
  // (g.chi)(sigma) = chi(g^{-1} sigma g) is linear in (alpha, beta); read it off on the unit translations.
  const auto [a1, b1] = conjugate_translation(n, g, 1, 0);
  const auto [a2, b2] = conjugate_translation(n, g, 0, 1);
  return {static_cast<int>(residue(kappa * a1 + lambda * b1, n)),
          static_cast<int>(residue(kappa * a2 + lambda * b2, n))};
}

FermatGroup::FermatGroup(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("group order parameter must be positive");
}

GroupElement FermatGroup::make(std::int64_t alpha, std::int64_t beta, Perm perm) const {
  return {static_cast<int>(residue(alpha, n_)), static_cast<int>(residue(beta, n_)), perm};
}

GroupElement FermatGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  // sigma_a x sigma_b y = sigma_a (x sigma_b x^{-1}) x y
  const auto [ca, cb] = conjugate_translation(n_, perm_inverse(a.perm), b.alpha, b.beta);
  return make(a.alpha + ca, a.beta + cb, perm_multiply(a.perm, b.perm));
}

GroupElement FermatGroup::inverse(const GroupElement& a) const {
  // (sigma x)^{-1} = x^{-1} sigma^{-1} = (x^{-1} sigma^{-1} x) x^{-1}
  const auto [ca, cb] = conjugate_translation(n_, a.perm, -a.alpha, -a.beta);
  return make(ca, cb, perm_inverse(a.perm));
}

GroupElement FermatGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
  return multiply(multiply(inverse(h), g), h);
}

std::vector<GroupElement> FermatGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (Perm x : kAllPerms) {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) out.push_back({a, b, x});
    }
  }
  return out;
}

std::string to_string(Rho rho) {
  switch (rho) {
    case Rho::triv: return "triv";
    case Rho::sgn: return "sgn";
    case Rho::stan: return "stan";
  }
  return "?";
}

std::string to_string(OrbitClass orbit) {
  switch (orbit) {
    case OrbitClass::fully_fixed: return "fully_fixed";
    case OrbitClass::diagonal: return "diagonal";
    case OrbitClass::generic: return "generic";
  }
  return "?";
}

int irrep_degree(const IrrepLabel& label) {
  switch (label.orbit) {
    case OrbitClass::fully_fixed: return label.rho == Rho::stan ? 2 : 1;
    case OrbitClass::diagonal: return 3;
    case OrbitClass::generic: return 6;
  }
  return 0;
}

std::string to_string(const IrrepLabel& label) {
  return "theta(" + std::to_string(label.kappa) + "," + std::to_string(label.lambda) + "," + to_string(label.rho) + ")";
}

std::pair<int, int> canonical_orbit_representative(int n, std::int64_t kappa, std::int64_t lambda) {
  std::pair<int, int> best{n, n};
  for (Perm g : kAllPerms) best = std::min(best, s3_action_on_character(n, g, kappa, lambda));
  return best;
}

namespace {

bool is_fixed_diagonal(int n, int kappa) { return residue(3 * static_cast<std::int64_t>(kappa), n) == 0; }

}  // namespace

std::vector<IrrepLabel> list_irreps(int n) {
  if (n < 4) throw std::invalid_argument("list_irreps requires n >= 4");
  std::vector<IrrepLabel> out;
  for (int nu = 0; nu < 3; ++nu) {
    if (nu > 0 && n % 3 != 0) break;
    const int c = nu * n / 3;
    for (Rho rho : {Rho::triv, Rho::sgn, Rho::stan}) out.push_back({OrbitClass::fully_fixed, rho, c, c, nu});
  }
  for (int kappa = 1; kappa < n; ++kappa) {
    if (is_fixed_diagonal(n, kappa)) continue;
    for (Rho rho : {Rho::triv, Rho::sgn}) out.push_back({OrbitClass::diagonal, rho, kappa, kappa, 0});
  }
  std::set<std::pair<int, int>> generic;
  for (int kappa = 0; kappa < n; ++kappa) {
    for (int lambda = 0; lambda < n; ++lambda) {
      if (kappa == lambda) continue;
      if (residue(lambda + 2 * kappa, n) == 0 || residue(kappa + 2 * lambda, n) == 0) continue;
      generic.insert(canonical_orbit_representative(n, kappa, lambda));
    }
  }
  for (const auto& [kappa, lambda] : generic) out.push_back({OrbitClass::generic, Rho::triv, kappa, lambda, 0});
  std::sort(out.begin(), out.end());
  return out;
}

IrrepLabel find_irrep(int n, std::int64_t kappa_in, std::int64_t lambda_in, Rho rho) {
  int kappa = static_cast<int>(residue(kappa_in, n));
  int lambda = static_cast<int>(residue(lambda_in, n));
  bool diagonal_orbit = true;
  if (kappa == lambda) {
  } else if (residue(lambda + 2 * kappa, n) == 0) {
    lambda = kappa;
  } else if (residue(kappa + 2 * lambda, n) == 0) {
    kappa = lambda;
  } else {
    diagonal_orbit = false;
  }

  if (diagonal_orbit && is_fixed_diagonal(n, kappa)) {
    return {OrbitClass::fully_fixed, rho, kappa, kappa, static_cast<int>(3 * static_cast<std::int64_t>(kappa) / n)};
  }
  if (diagonal_orbit) {
    if (rho == Rho::stan) throw std::invalid_argument("theta(k,k,stan) exists only for 3k = 0 mod n");
    return {OrbitClass::diagonal, rho, kappa, kappa, 0};
  }
  if (rho != Rho::triv) throw std::invalid_argument("generic orbits carry only the trivial stabilizer representation");
  const auto [k, l] = canonical_orbit_representative(n, kappa, lambda);
  return {OrbitClass::generic, Rho::triv, k, l, 0};
}

int s3_character(Rho rho, Perm x) {
  switch (rho) {
    case Rho::triv: return 1;
    case Rho::sgn: return perm_sign(x);
    case Rho::stan: return x == Perm::identity ? 2 : (perm_sign(x) == 1 ? -1 : 0);
  }
  return 0;
}

Cyclo irrep_character(int n, const IrrepLabel& label, const GroupElement& g) {
  const std::int64_t a = g.alpha;
  const std::int64_t b = g.beta;
  const std::int64_t k = label.kappa;
  const std::int64_t l = label.lambda;
  switch (label.orbit) {
    case OrbitClass::fully_fixed:
      return Cyclo::root_power(n, k * (a + b)) * Cyclo(n, s3_character(label.rho, g.perm));

    case OrbitClass::diagonal: {
      const int sign = s3_character(label.rho, g.perm);
      switch (g.perm) {
        case Perm::identity:
          return Cyclo::root_power(n, k * (a + b)) + Cyclo::root_power(n, k * (a - 2 * b)) +
                 Cyclo::root_power(n, k * (b - 2 * a));
        case Perm::ts: return Cyclo::root_power(n, k * (a + b)) * Cyclo(n, sign);
        case Perm::t: return Cyclo::root_power(n, k * (a - 2 * b)) * Cyclo(n, sign);
        case Perm::st: return Cyclo::root_power(n, k * (b - 2 * a)) * Cyclo(n, sign);
        case Perm::s:
        case Perm::s2: return Cyclo(n);
      }
      break;
    }

    case OrbitClass::generic: {
      if (g.perm != Perm::identity) return Cyclo(n);
      std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
      for (Perm x : kAllPerms) {
        const auto [kk, ll] = s3_action_on_character(n, x, k, l);
        ++counts[static_cast<std::size_t>(residue(kk * a + ll * b, n))];
      }
      return Cyclo::from_exponent_counts(n, std::span<const std::int64_t>(counts));
    }
  }
  throw std::logic_error("unhandled irrep label");
}

}  // namespace fermat
