#pragma once

/**
 * @file lattice.hpp
 * @brief Root-of-unity sums over the triangle E_M = {(i,j) : 0 <= i, j, i+j <= M}
 *        and the half range 0 <= i <= floor(M/2), by enumeration and in closed form.
 *
 * Summing zeta^{alpha(i+X) + beta(j+Y)} over all (alpha, beta) kills every term
 * except those with i = -X and j = -Y (mod n), so
 *
 *   I_M(X,Y) = n^2 * #{(i,j) in E_M : i = -X, j = -Y mod n}
 *   J_M(X)   = n^2 * #{0 <= i <= floor(M/2) : i = -X mod n}
 *
 * and both vanish for M < 0. The polydifferential computations only need the
 * band differences I_M - I_{M-n} and J_M - J_{M-n} at M = m(n-3), which have
 * closed forms in terms of residues mod n.
 */

#include <cstdint>

#include "fermat/cyclotomic.hpp"

namespace fermat {

struct TriangleQuery {
  std::int64_t M = 0;
  int n = 4;
  std::int64_t X = 0;
  std::int64_t Y = 0;
};

/// #{(i,j) in E_M : i = -X, j = -Y mod n}, by enumeration. Zero for M < 0.
std::int64_t count_triangle(const TriangleQuery& q);

/// #{0 <= i <= floor(M/2) : i = -X mod n}, by enumeration. Zero for M < 0.
std::int64_t count_half_range(std::int64_t M, int n, std::int64_t X);

/// I_M(X,Y) = n^2 * count_triangle(q).
std::int64_t triangle_sum(const TriangleQuery& q);

/// I_M(X,Y) evaluated literally as a double sum of roots of unity in Z[zeta_n].
/// O(n^2 M^2); meant for checking the counting identity on small inputs.
Cyclo triangle_sum_direct(const TriangleQuery& q);

/// J_M(X) = n^2 * count_half_range(M, n, X).
std::int64_t half_range_sum(std::int64_t M, int n, std::int64_t X);

/// J_M(X) with the linear form alpha + beta, alpha - 2 beta or beta - 2 alpha
/// (selected by form = 0, 1, 2) summed literally in Z[zeta_n].
Cyclo half_range_sum_direct(std::int64_t M, int n, std::int64_t X, int form);

/// The branch quantity alpha_{X,Y} in {-1, 0, 1} at M = m(n-3): the band count
/// is m - ceil((3m-1)/n) + alpha_{X,Y}. Requires n >= 4, m >= 1.
int triangle_correction(int n, std::int64_t m, std::int64_t X, std::int64_t Y);

/// I_M(X,Y) - I_{M-n}(X,Y) at M = m(n-3), in closed form (includes the n^2 factor).
std::int64_t triangle_difference(int n, std::int64_t m, std::int64_t X, std::int64_t Y);

/// (J_M(X) - J_{M-n}(X)) / n^2 at M = m(n-3), in closed form. Always 0 or 1.
int half_range_difference(int n, std::int64_t m, std::int64_t X);

/// m - ceil((3m-1)/n), the generic part of the band count.
std::int64_t band_base(int n, std::int64_t m);

}  // namespace fermat
