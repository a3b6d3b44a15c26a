#pragma once

/**
 * @file oracle.hpp
 * @brief First-principles action of G on the monomial bases of W_m and I_m.
 *
 * Every group element acts by a monomial matrix: it sends w_{i,j} (resp. pi_{i,j})
 * to a signed root of unity times another basis vector. Traces are read off the
 * fixed basis vectors directly; nothing here uses the closed-form character or
 * lattice-count formulas.
 */

#include <cstdint>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/group.hpp"

namespace fermat {

enum class BasisKind : std::uint8_t { W, I };
enum class TraceKind : std::uint8_t { W, I, V };

struct BasisVector {
  BasisKind kind = BasisKind::W;
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

struct MonomialAction {
  BasisVector target;
  Cyclo scalar;
};

/// Side length of the index triangle of the given basis: m(n-3) for W, m(n-3)-n for I.
std::int64_t basis_triangle_side(int n, std::int64_t m, BasisKind kind);

/// All basis vectors of W_m or I_m, in (i, j) order.
std::vector<BasisVector> basis(int n, std::int64_t m, BasisKind kind);

/// g . v for g = sigma_{alpha,beta} x: the S_3 part x is applied first, then sigma.
MonomialAction act(int n, std::int64_t m, const GroupElement& g, const BasisVector& v);

/// Trace of g on W_m, I_m, or V_m = W_m / I_m (W-trace minus I-trace; I_1 = 0).
Cyclo trace_char(int n, std::int64_t m, const GroupElement& g, TraceKind kind);

}  // namespace fermat
