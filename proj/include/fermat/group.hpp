#pragma once

/**
 * @file group.hpp
 * @brief The automorphism group G = (Z/n x Z/n) x| S_3 of the Fermat curve F_n
 *        and its irreducible complex characters.
 *
 * Elements are kept in the normal form sigma_{alpha,beta} * x with x in S_3.
 * The translation part sigma_{alpha,beta} acts by (x, y) -> (zeta^alpha x, zeta^beta y).
 */

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fermat/cyclotomic.hpp"

namespace fermat {

/// S_3 = <s, t | s^3 = t^2 = 1, tst = s^{-1}>.
enum class Perm : std::uint8_t { identity, s, s2, t, ts, st };

inline constexpr Perm kAllPerms[] = {Perm::identity, Perm::s, Perm::s2, Perm::t, Perm::ts, Perm::st};

Perm perm_multiply(Perm x, Perm y);
Perm perm_inverse(Perm x);
/// +1 on the rotations {1, s, s^2}, -1 on the reflections {t, ts, st}.
int perm_sign(Perm x);
std::string to_string(Perm x);

struct GroupElement {
  int alpha = 0;
  int beta = 0;
  Perm perm = Perm::identity;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// g^{-1} sigma_{alpha,beta} g, returned as the translation pair.
std::pair<int, int> conjugate_translation(int n, Perm g, std::int64_t alpha, std::int64_t beta);

/// The pair (kappa', lambda') with g . chi_{kappa,lambda} = chi_{kappa',lambda'}.
std::pair<int, int> s3_action_on_character(int n, Perm g, std::int64_t kappa, std::int64_t lambda);

class FermatGroup {
 public:
  explicit FermatGroup(int n);

  int n() const { return n_; }
  std::size_t order() const { return 6 * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

  GroupElement make(std::int64_t alpha, std::int64_t beta, Perm perm) const;
  GroupElement identity() const { return {}; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  /// h^{-1} g h
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;

  /// All 6n^2 elements, perm-major then (alpha, beta).
  std::vector<GroupElement> elements() const;

 private:
  int n_;
};

enum class Rho : std::uint8_t { triv, sgn, stan };
enum class OrbitClass : std::uint8_t { fully_fixed, diagonal, generic };

std::string to_string(Rho rho);
std::string to_string(OrbitClass orbit);

/// One isomorphism class theta_{kappa,lambda,rho} of irreducible representations.
/// Member order gives the catalog ordering: fully fixed, diagonal, generic; then rho; then (kappa, lambda).
struct IrrepLabel {
  OrbitClass orbit = OrbitClass::fully_fixed;
  Rho rho = Rho::triv;
  int kappa = 0;
  int lambda = 0;
  /// kappa = lambda = nu*n/3 for fully fixed labels; 0 otherwise.
  int nu = 0;

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

int irrep_degree(const IrrepLabel& label);

/// Human readable form, e.g. "theta(0,1,triv)".
std::string to_string(const IrrepLabel& label);

/// One label per isomorphism class, sorted. Requires n >= 4.
std::vector<IrrepLabel> list_irreps(int n);

/// The lexicographically smallest pair in the S_3-orbit of chi_{kappa,lambda}.
std::pair<int, int> canonical_orbit_representative(int n, std::int64_t kappa, std::int64_t lambda);

/// The catalog label for (kappa, lambda, rho), canonicalizing the orbit representative.
/// Throws std::invalid_argument when no such irreducible exists.
IrrepLabel find_irrep(int n, std::int64_t kappa, std::int64_t lambda, Rho rho);

/// Character value of the S_3 representation rho at x.
int s3_character(Rho rho, Perm x);

Cyclo irrep_character(int n, const IrrepLabel& label, const GroupElement& g);

}  // namespace fermat
