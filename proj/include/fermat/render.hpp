#pragma once

/**
 * @file render.hpp
 * @brief Text, CSV and JSON renderings of decompositions, catalogs and series.
 *
 * JSON schema:
 *   rational function   {"num": [c0, c1, ...], "den": [d0, d1, ...]}  (ascending, integers)
 *   multiplicity table  {"n", "m", "dimension", "irreps": [{"kappa", "lambda", "rho", "degree", "mult"}]}
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/decompose.hpp"
#include "fermat/series.hpp"

namespace fermat {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

/// Cells of one row in the layout of the classic n = 4, 5, 6 table: n, m, nine
/// cells for the fully fixed labels, the bracket lists "[k,t]" for the diagonal
/// triv and sgn labels, "[(k,l),t]" for the generic labels, and the dimension.
/// When 3 does not divide n the nine cells are (triv, -, -, sgn, -, -, stan, -, -);
/// otherwise they run over nu = 0, 1, 2 and within each nu over triv, sgn, stan.
std::vector<std::string> table_row_cells(const MultiplicityTable& table);
std::string table_row(const MultiplicityTable& table);

nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiplicityTable& table);
MultiplicityTable multiplicity_table_from_json(const nlohmann::json& j);

std::string render_decompose(const std::vector<MultiplicityTable>& tables, Format format);
std::string render_irreps(int n, Format format);
std::string render_series(int n, Format format);
std::string render_taylor(const std::string& name, const RationalFunction& f, int terms, Format format);

}  // namespace fermat
