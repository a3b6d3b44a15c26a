#pragma once

/**
 * @file chars.hpp
 * @brief Closed-form characters of G on the spaces W_m, I_m and
 *        V_m = H^0(F_n, Omega^{(x)m}) = W_m / I_m.
 *
 * W_m is spanned by the monomial m-differentials indexed by E_{m(n-3)} and I_m by
 * the relations indexed by E_{m(n-3)-n}. On a translation the trace is a double
 * sum of root powers over the triangle; on the rotations s, s^2 a single fixed
 * monomial survives (or none); on the reflections t, ts, st the fixed monomials
 * form a half range.
 */

#include <cstdint>

#include "fermat/cyclotomic.hpp"
#include "fermat/group.hpp"

namespace fermat {

struct DiffSpaceSpec {
  int n = 4;
  std::int64_t m = 1;
};

/// (n-1)(n-2)/2
std::int64_t genus(int n);

/// Riemann-Roch: 1 for m = 0, g for m = 1, (2m-1)(g-1) for m >= 2.
std::int64_t dim_Vm(const DiffSpaceSpec& spec);

/// |E_M|, zero for M < 0.
std::int64_t triangle_size(std::int64_t M);

Cyclo char_Wm(const DiffSpaceSpec& spec, const GroupElement& g);

/// Zero for m = 1 and whenever m(n-3) < n.
Cyclo char_Im(const DiffSpaceSpec& spec, const GroupElement& g);

/// chi_{W_1} for m = 1, chi_{W_m} - chi_{I_m} for m >= 2, the trivial character for m = 0.
Cyclo char_Vm(const DiffSpaceSpec& spec, const GroupElement& g);

}  // namespace fermat
