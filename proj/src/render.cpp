#include "fermat/render.hpp"

#include <sstream>
#include <stdexcept>

namespace fermat {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::vector<std::string> escaped;
  for (const auto& c : cells) escaped.push_back(csv_escape(c));
  return join(escaped, ",") + "\n";
}

Rho parse_rho(const std::string& name) {
  if (name == "triv") return Rho::triv;
  if (name == "sgn") return Rho::sgn;
  if (name == "stan") return Rho::stan;
  throw std::invalid_argument("unknown rho: " + name);
}

nlohmann::json integers(const std::vector<Integer>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : v) out.push_back(to_int64(z));
  return out;
}

std::vector<Integer> integers_from(const nlohmann::json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.emplace_back(static_cast<long>(x.get<std::int64_t>()));
  return out;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

std::vector<std::string> table_row_cells(const MultiplicityTable& table) {
  std::vector<std::string> cells{std::to_string(table.n), std::to_string(table.m)};
  const int c1 = table.n / 3;
  auto fixed = [&](Rho rho, int nu) {
    return std::to_string(table.multiplicity_of({OrbitClass::fully_fixed, rho, nu * c1, nu * c1, nu}));
  };
  if (table.n % 3 == 0) {
    // three fully fixed characters: grouped by nu, then rho
    for (int nu = 0; nu < 3; ++nu) {
      for (Rho rho : {Rho::triv, Rho::sgn, Rho::stan}) cells.push_back(fixed(rho, nu));
    }
  } else {
    for (Rho rho : {Rho::triv, Rho::sgn, Rho::stan}) {
      cells.push_back(fixed(rho, 0));
      cells.emplace_back("-");
      cells.emplace_back("-");
    }
  }
  for (Rho rho : {Rho::triv, Rho::sgn}) {
    std::vector<std::string> items;
    for (const auto& [label, mult] : table.entries) {
      if (label.orbit != OrbitClass::diagonal || label.rho != rho || mult == 0) continue;
      items.push_back("[" + std::to_string(label.kappa) + "," + std::to_string(mult) + "]");
    }
    cells.push_back(join(items, ", "));
  }
  std::vector<std::string> generic;
  for (const auto& [label, mult] : table.entries) {
    if (label.orbit != OrbitClass::generic || mult == 0) continue;
    generic.push_back("[(" + std::to_string(label.kappa) + "," + std::to_string(label.lambda) + ")," +
                      std::to_string(mult) + "]");
  }
  cells.push_back(join(generic, ", "));
  cells.push_back(std::to_string(table.dimension()));
  return cells;
}

std::string table_row(const MultiplicityTable& table) { return join(table_row_cells(table), " & "); }

nlohmann::json to_json(const RationalFunction& f) {
  const auto [num, den] = f.integer_form();
  return {{"num", integers(num)}, {"den", integers(den)}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
  const auto num = integers_from(j.at("num"));
  const auto den = integers_from(j.at("den"));
  return RationalFunction::from_integer_form(num, den);
}

nlohmann::json to_json(const MultiplicityTable& table) {
  nlohmann::json irreps = nlohmann::json::array();
  for (const auto& [label, mult] : table.entries) {
    irreps.push_back({{"kappa", label.kappa},
                      {"lambda", label.lambda},
                      {"rho", to_string(label.rho)},
                      {"degree", irrep_degree(label)},
                      {"mult", mult}});
  }
  return {{"n", table.n}, {"m", table.m}, {"dimension", table.dimension()}, {"irreps", irreps}};
}

MultiplicityTable multiplicity_table_from_json(const nlohmann::json& j) {
  MultiplicityTable table{j.at("n").get<int>(), j.at("m").get<std::int64_t>(), {}};
  for (const auto& item : j.at("irreps")) {
    const IrrepLabel label =
        find_irrep(table.n, item.at("kappa").get<int>(), item.at("lambda").get<int>(),
                   parse_rho(item.at("rho").get<std::string>()));
    table.entries.emplace_back(label, item.at("mult").get<std::int64_t>());
  }
  return table;
}

std::string render_decompose(const std::vector<MultiplicityTable>& tables, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::table: {
      if (!tables.empty() && tables.front().n % 3 == 0) {
        os << "n & m & triv0 & sgn0 & stan0 & triv1 & sgn1 & stan1 & triv2 & sgn2 & stan2";
      } else {
        os << "n & m & triv & - & - & sgn & - & - & stan & - & -";
      }
      os << " & diag triv & diag sgn & generic & dim\n";
      for (const auto& t : tables) os << table_row(t) << "\n";
      break;
    }
    case Format::csv: {
      os << "n,m,kappa,lambda,rho,degree,mult\n";
      for (const auto& t : tables) {
        for (const auto& [label, mult] : t.entries) {
          os << csv_line({std::to_string(t.n), std::to_string(t.m), std::to_string(label.kappa),
                          std::to_string(label.lambda), to_string(label.rho),
                          std::to_string(irrep_degree(label)), std::to_string(mult)});
        }
      }
      break;
    }
    case Format::json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& t : tables) out.push_back(to_json(t));
      os << out.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_irreps(int n, Format format) {
  const auto labels = list_irreps(n);
  std::ostringstream os;
  switch (format) {
    case Format::table:
      os << "label\torbit\tdegree\n";
      for (const auto& l : labels) os << to_string(l) << "\t" << to_string(l.orbit) << "\t" << irrep_degree(l) << "\n";
      break;
    case Format::csv:
      os << "kappa,lambda,rho,orbit,degree\n";
      for (const auto& l : labels) {
        os << csv_line({std::to_string(l.kappa), std::to_string(l.lambda), to_string(l.rho), to_string(l.orbit),
                        std::to_string(irrep_degree(l))});
      }
      break;
    case Format::json: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& l : labels) {
        out.push_back({{"kappa", l.kappa},
                       {"lambda", l.lambda},
                       {"rho", to_string(l.rho)},
                       {"orbit", to_string(l.orbit)},
                       {"degree", irrep_degree(l)}});
      }
      os << nlohmann::json{{"n", n}, {"count", labels.size()}, {"irreps", out}}.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_series(int n, Format format) {
  const auto labels = list_irreps(n);
  std::vector<std::pair<IrrepLabel, RationalFunction>> series;
  for (const auto& l : labels) series.emplace_back(l, isotypic_series(n, l));
  const RationalFunction weighted = total_series(n, true);
  const RationalFunction unweighted = total_series(n, false);

  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (const auto& [l, f] : series) os << to_string(l) << "\t" << f.to_string() << "\n";
      os << "total_weighted\t" << weighted.to_string() << "\n";
      os << "total_unweighted\t" << unweighted.to_string() << "\n";
      break;
    case Format::csv:
      os << "name,kappa,lambda,rho,series\n";
      for (const auto& [l, f] : series) {
        os << csv_line({to_string(l), std::to_string(l.kappa), std::to_string(l.lambda), to_string(l.rho),
                        f.to_string()});
      }
      os << csv_line({"total_weighted", "", "", "", weighted.to_string()});
      os << csv_line({"total_unweighted", "", "", "", unweighted.to_string()});
      break;
    case Format::json: {
      nlohmann::json items = nlohmann::json::array();
      for (const auto& [l, f] : series) {
        items.push_back({{"kappa", l.kappa},
                         {"lambda", l.lambda},
                         {"rho", to_string(l.rho)},
                         {"degree", irrep_degree(l)},
                         {"series", to_json(f)},
                         {"text", f.to_string()}});
      }
      nlohmann::json out{{"n", n},
                         {"isotypic", items},
                         {"total_weighted", {{"series", to_json(weighted)}, {"text", weighted.to_string()}}},
                         {"total_unweighted", {{"series", to_json(unweighted)}, {"text", unweighted.to_string()}}}};
      os << out.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_taylor(const std::string& name, const RationalFunction& f, int terms, Format format) {
  const auto coeffs = taylor(f, terms - 1 < 0 ? 0 : terms - 1);
  const std::size_t count = static_cast<std::size_t>(terms);
  std::ostringstream os;
  switch (format) {
    case Format::table:
      os << name << "\t" << f.to_string() << "\n";
      for (std::size_t m = 0; m < count; ++m) os << m << "\t" << rational_text(coeffs[m]) << "\n";
      break;
    case Format::csv:
      os << "m,coefficient\n";
      for (std::size_t m = 0; m < count; ++m) os << m << "," << rational_text(coeffs[m]) << "\n";
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t m = 0; m < count; ++m) {
        if (coeffs[m].get_den() == 1) arr.push_back(to_int64(coeffs[m].get_num()));
        else arr.push_back(rational_text(coeffs[m]));
      }
      os << nlohmann::json{{"name", name}, {"series", to_json(f)}, {"text", f.to_string()}, {"coefficients", arr}}.dump(2)
         << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace fermat
