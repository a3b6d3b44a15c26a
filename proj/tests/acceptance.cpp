// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fermat/chars.hpp"
#include "fermat/decompose.hpp"
#include "fermat/lattice.hpp"
#include "fermat/oracle.hpp"
#include "fermat/render.hpp"
#include "fermat/series.hpp"
#include "golden.hpp"

using namespace fermat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string squash(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::vector<std::string> normalized_cells(const std::string& row) {
  std::vector<std::string> cells;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, '&')) cells.push_back(squash(cell));
  return cells;
}

Polynomial parsed(const char* text) {
  std::vector<Rational> q;
  for (long c : golden::parse_poly(text)) q.emplace_back(c);
  return Polynomial(std::move(q));
}

Rho rho_of(const std::string& s) { return s == "triv" ? Rho::triv : s == "sgn" ? Rho::sgn : Rho::stan; }

Outcome table_golden() {
  Outcome r;
  std::size_t idx = 0;
  for (int n : {4, 5, 6}) {
    const int m_max = n == 6 ? 9 : 13;
    for (const auto& t : decompose_table(n, 1, m_max)) {
      if (idx >= golden::kTableRows.size()) {
        r.fail("ran out of golden rows");
        return r;
      }
      const auto expected = normalized_cells(golden::kTableRows[idx++]);
      auto got = table_row_cells(t);
      for (auto& c : got) c = squash(c);
      if (got != expected) r.fail("mismatch at n=" + std::to_string(n) + " m=" + std::to_string(t.m) + ": " + table_row(t));
    }
  }
  if (idx != golden::kTableRows.size()) r.fail("unused golden rows");
  return r;
}

Outcome series_golden() {
  Outcome r;
  for (const auto& row : golden::kSeriesN6) {
    const IrrepLabel l = find_irrep(6, row.kappa, row.lambda, rho_of(row.rho));
    const RationalFunction expected(parsed(row.num), parsed(row.den));
    const RationalFunction got = isotypic_series(6, l);
    if (got != expected) r.fail(to_string(l) + " gave " + got.to_string() + ", expected " + expected.to_string());
  }
  if (golden::kSeriesN6.size() != list_irreps(6).size()) r.fail("golden table does not cover every label");
  const RationalFunction total = total_series(6, true);
  if (total.to_string() != golden::kWeightedTotalN6) r.fail("weighted total " + total.to_string());
  const auto coeffs = taylor(total, 19);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] != golden::kWeightedTaylorN6[m]) r.fail("taylor coefficient " + std::to_string(m));
  }
  return r;
}

Outcome dimension_identity() {
  Outcome r;
  for (int n = 4; n <= 12; ++n) {
    const std::int64_t g = (n - 1) * (n - 2) / 2;
    for (std::int64_t m = 0; m <= 20; ++m) {
      const std::int64_t expected = m == 0 ? 1 : m == 1 ? g : (2 * m - 1) * n * (n - 3) / 2;
      if (decompose(n, m).dimension() != expected) {
        r.fail("n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  return r;
}

Outcome oracle_equivalence() {
  Outcome r;
  const unsigned threads = oracle_threads_from_env();
  for (int n = 4; n <= 9; ++n) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      // oracle_decompose throws if any inner product is not divisible by 6n^2
      for (const auto& [l, mult] : oracle_decompose(n, m, threads)) {
        const Rational closed = multiplicity_rational(n, m, l);
        if (closed != mult) {
          r.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + to_string(l) + " closed=" +
                 closed.get_str() + " oracle=" + std::to_string(mult));
        }
      }
    }
  }
  return r;
}

Outcome lattice_closed_forms() {
  Outcome r;
  for (int n = 4; n <= 10; ++n) {
    for (std::int64_t m = 1; m <= 8; ++m) {
      const std::int64_t M = m * (n - 3);
      for (std::int64_t X = 0; X < n; ++X) {
        for (std::int64_t Y = 0; Y < n; ++Y) {
          const std::int64_t diff = triangle_sum({M, n, X, Y}) - triangle_sum({M - n, n, X, Y});
          if (triangle_difference(n, m, X, Y) != diff) {
            r.fail("I n=" + std::to_string(n) + " m=" + std::to_string(m) + " X=" + std::to_string(X) +
                   " Y=" + std::to_string(Y));
          }
        }
        const std::int64_t jd = count_half_range(M, n, X) - count_half_range(M - n, n, X);
        if (half_range_difference(n, m, X) != jd) {
          r.fail("J n=" + std::to_string(n) + " m=" + std::to_string(m) + " X=" + std::to_string(X));
        }
      }
    }
  }
  return r;
}

Outcome character_identities() {
  Outcome r;
  for (int n = 4; n <= 12; ++n) {
    for (std::int64_t m = 1; m <= 20; ++m) {
      if (char_Vm({n, m}, GroupElement{}) != Cyclo(n, dim_Vm({n, m}))) r.fail("identity trace n=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(2718);
  for (int n = 4; n <= 8; ++n) {
    const FermatGroup G(n);
    const auto elems = G.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::int64_t m = 1; m <= 5; ++m) {
      for (int trial = 0; trial < 30; ++trial) {
        const auto& g = elems[pick(rng)];
        const auto& h = elems[pick(rng)];
        if (char_Vm({n, m}, G.conjugate(g, h)) != char_Vm({n, m}, g)) r.fail("class function n=" + std::to_string(n));
      }
      for (const auto& g : elems) {
        if (char_Vm({n, m}, g) != trace_char(n, m, g, TraceKind::V)) {
          r.fail("oracle trace n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
      }
    }
  }
  return r;
}

Outcome structural_irreps() {
  Outcome r;
  for (int n = 4; n <= 16; ++n) {
    const auto labels = list_irreps(n);
    long sum = 0;
    int fixed = 0;
    int diagonal = 0;
    int generic = 0;
    for (const auto& l : labels) {
      sum += static_cast<long>(irrep_degree(l)) * irrep_degree(l);
      fixed += l.orbit == OrbitClass::fully_fixed;
      diagonal += l.orbit == OrbitClass::diagonal;
      generic += l.orbit == OrbitClass::generic;
    }
    const int f = n % 3 == 0 ? 3 : 1;
    if (sum != 6L * n * n) r.fail("sum of squares n=" + std::to_string(n));
    if (fixed != 3 * f || diagonal != 2 * (n - f) || generic != (n * n - f - 3 * (n - f)) / 6) {
      r.fail("orbit census n=" + std::to_string(n));
    }
  }
  for (int n = 4; n <= 8; ++n) {
    const auto elems = FermatGroup(n).elements();
    const auto labels = list_irreps(n);
    std::vector<std::vector<Cyclo>> rows;
    for (const auto& l : labels) {
      std::vector<Cyclo> row;
      for (const auto& g : elems) row.push_back(irrep_character(n, l, g));
      rows.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a; b < rows.size(); ++b) {
        Cyclo s(n);
        for (std::size_t g = 0; g < elems.size(); ++g) s += rows[a][g] * rows[b][g].conj();
        if (s != Cyclo(n, a == b ? static_cast<long>(elems.size()) : 0)) {
          r.fail("orthogonality n=" + std::to_string(n) + " " + to_string(labels[a]) + " " + to_string(labels[b]));
        }
      }
    }
  }
  return r;
}

Outcome series_table_consistency() {
  Outcome r;
  for (int n = 4; n <= 9; ++n) {
    for (const auto& l : list_irreps(n)) {
      const auto coeffs = taylor(isotypic_series(n, l), 3 * n);
      for (int m = 0; m <= 3 * n; ++m) {
        if (coeffs[static_cast<std::size_t>(m)] != multiplicity(n, m, l)) {
          r.fail("n=" + std::to_string(n) + " " + to_string(l) + " m=" + std::to_string(m));
        }
      }
    }
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 table golden n=4,5,6", table_golden},
      {"2 series golden n=6", series_golden},
      {"3 dimension identity n<=12 m<=20", dimension_identity},
      {"4 oracle equivalence n<=9 m<=6", oracle_equivalence},
      {"5 lattice closed forms n<=10 m<=8", lattice_closed_forms},
      {"6 character identities", character_identities},
      {"7 structural irreps", structural_irreps},
      {"8 series/table consistency n<=9", series_table_consistency},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", name.c_str(), secs,
                out.ok ? "" : ": ", out.detail.c_str());
    failures += out.ok ? 0 : 1;
  }
  return failures;
}
