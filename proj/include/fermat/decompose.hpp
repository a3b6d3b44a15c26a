#pragma once

/**
 * @file decompose.hpp
 * @brief Multiplicities of the irreducible G-modules in H^0(F_n, Omega^{(x)m}).
 *
 * The closed form is
 *
 *   <chi_{V_m}, chi_theta> = (deg theta / 6) (m - ceil((3m-1)/n) + A) + B/2 + Gamma/3
 *
 * with A an average of band corrections alpha_{X,Y} over the S_3-orbit of the
 * label, B a signed half-range count and Gamma a mod-3 correction that only
 * fully fixed labels carry. multiplicity_oracle() recomputes the same number as
 * an exact inner product of characters over all 6n^2 group elements.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "fermat/group.hpp"
#include "fermat/numeric.hpp"

namespace fermat {

struct CoefficientBundle {
  Rational A;
  Rational B;
  int Gamma = 0;
};

struct MultiplicityTable {
  int n = 4;
  std::int64_t m = 0;
  std::vector<std::pair<IrrepLabel, std::int64_t>> entries;

  /// Sum of degree * multiplicity.
  std::int64_t dimension() const;
  std::int64_t multiplicity_of(const IrrepLabel& label) const;
};

/// Requires m >= 1.
CoefficientBundle coeffs(int n, std::int64_t m, const IrrepLabel& label);

/// Closed-form multiplicity; m = 0 gives the trivial module.
/// Throws std::logic_error if the closed form is not a non-negative integer.
std::int64_t multiplicity(int n, std::int64_t m, const IrrepLabel& label);

/// Closed-form multiplicity as an unchecked rational, for diagnostics.
Rational multiplicity_rational(int n, std::int64_t m, const IrrepLabel& label);

MultiplicityTable decompose(int n, std::int64_t m);
std::vector<MultiplicityTable> decompose_table(int n, std::int64_t m_min, std::int64_t m_max);

inline constexpr int kDefaultOracleBound = 9;

/// Thread cap from FERMAT_REPS_THREADS (unset, empty or invalid means 0, i.e. hardware concurrency).
unsigned oracle_threads_from_env();

/// (1/6n^2) sum_g chi_{V_m}(g) conj(chi_theta(g)) computed in Z[zeta_n].
/// Throws std::logic_error when the inner product is not integral.
std::int64_t multiplicity_oracle(int n, std::int64_t m, const IrrepLabel& label, int oracle_bound = kDefaultOracleBound);

/// Oracle multiplicities for every label at once, sharing the character of V_m.
/// `threads` = 0 picks the hardware concurrency.
std::vector<std::pair<IrrepLabel, std::int64_t>> oracle_decompose(int n, std::int64_t m, unsigned threads = 0,
                                                                  int oracle_bound = kDefaultOracleBound);

}  // namespace fermat
