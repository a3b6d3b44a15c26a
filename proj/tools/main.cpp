#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fermat/decompose.hpp"
#include "fermat/lattice.hpp"
#include "fermat/render.hpp"
#include "fermat/series.hpp"

namespace {

using namespace fermat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

struct CliConfig {
  int n = 0;
  std::string command;
  std::int64_t m_min = 1;
  std::int64_t m_max = 9;
  std::string format = "table";
  int taylor_terms = 20;
  int oracle_bound = kDefaultOracleBound;
  std::string series = "weighted";
  int kappa = 0;
  int lambda = 0;
  std::string rho = "triv";
  std::int64_t m = 1;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rho parse_rho(const std::string& s) {
  if (s == "triv") return Rho::triv;
  if (s == "sgn") return Rho::sgn;
  if (s == "stan") return Rho::stan;
  throw UsageError("unknown rho: " + s);
}

void require_n(const CliConfig& cfg) {
  if (cfg.n < 4) throw UsageError("--n must be at least 4");
}

int run_verify(const CliConfig& cfg, Format format, std::ostream& out) {
  std::vector<int> ns;
  if (cfg.n != 0) {
    require_n(cfg);
    if (cfg.n > cfg.oracle_bound) throw UsageError("--n exceeds --oracle-bound");
    ns.push_back(cfg.n);
  } else {
    for (int n = 4; n <= cfg.oracle_bound; ++n) ns.push_back(n);
  }
  if (cfg.m_min < 1) throw UsageError("verify needs --m-min >= 1");

  const unsigned threads = oracle_threads_from_env();
  nlohmann::json records = nlohmann::json::array();
  std::ostringstream text;
  int mismatches = 0;
  if (format == Format::csv) text << "n,m,kappa,lambda,rho,closed,oracle,status\n";
  for (int n : ns) {
    for (std::int64_t m = cfg.m_min; m <= cfg.m_max; ++m) {
      for (const auto& [label, oracle] : oracle_decompose(n, m, threads, cfg.oracle_bound)) {
        const Rational closed = multiplicity_rational(n, m, label);
        const bool ok = closed == oracle;
        mismatches += ok ? 0 : 1;
        const char* status = ok ? "PASS" : "FAIL";
        switch (format) {
          case Format::table:
            text << status << " n=" << n << " m=" << m << " " << to_string(label) << " closed=" << closed
                 << " oracle=" << oracle << "\n";
            break;
          case Format::csv:
            text << n << "," << m << "," << label.kappa << "," << label.lambda << "," << to_string(label.rho) << ","
                 << closed << "," << oracle << "," << status << "\n";
            break;
          case Format::json:
            records.push_back({{"n", n},
                               {"m", m},
                               {"kappa", label.kappa},
                               {"lambda", label.lambda},
                               {"rho", to_string(label.rho)},
                               {"closed", closed.get_str()},
                               {"oracle", oracle},
                               {"ok", ok}});
            break;
        }
      }
    }
  }
  if (format == Format::json) {
    out << nlohmann::json{{"mismatches", mismatches}, {"results", records}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (mismatches > 0) {
    std::cerr << "verify: " << mismatches << " mismatch(es) between closed form and oracle\n";
    return kExitVerify;
  }
  return kExitOk;
}

std::string lattice_probe(const CliConfig& cfg, Format format) {
  require_n(cfg);
  if (cfg.m < 1) throw UsageError("lattice-probe needs --m >= 1");
  const int n = cfg.n;
  const std::int64_t M = cfg.m * (n - 3);
  const std::int64_t i_enum = count_triangle({M, n, cfg.x, cfg.y}) - count_triangle({M - n, n, cfg.x, cfg.y});
  const std::int64_t j_enum = count_half_range(M, n, cfg.x) - count_half_range(M - n, n, cfg.x);
  const std::vector<std::pair<std::string, std::int64_t>> rows = {
      {"M", M},
      {"band_base", band_base(n, cfg.m)},
      {"alpha", triangle_correction(n, cfg.m, cfg.x, cfg.y)},
      {"I_diff", triangle_difference(n, cfg.m, cfg.x, cfg.y)},
      {"I_diff_enumerated", static_cast<std::int64_t>(n) * n * i_enum},
      {"J_diff", half_range_difference(n, cfg.m, cfg.x)},
      {"J_diff_enumerated", j_enum},
      {"I_M", triangle_sum({M, n, cfg.x, cfg.y})},
      {"J_M", half_range_sum(M, n, cfg.x)},
  };
  std::ostringstream os;
  switch (format) {
    case Format::table:
      for (const auto& [k, v] : rows) os << k << "\t" << v << "\n";
      break;
    case Format::csv:
      os << "n,m,x,y";
      for (const auto& [k, v] : rows) os << "," << k;
      os << "\n" << n << "," << cfg.m << "," << cfg.x << "," << cfg.y;
      for (const auto& [k, v] : rows) os << "," << v;
      os << "\n";
      break;
    case Format::json: {
      nlohmann::json j{{"n", n}, {"m", cfg.m}, {"x", cfg.x}, {"y", cfg.y}};
      for (const auto& [k, v] : rows) j[k] = v;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

int run(const CliConfig& cfg) {
  const Format format = parse_format(cfg.format);
  if (cfg.m_min > cfg.m_max) throw UsageError("--m-min must not exceed --m-max");
  if (cfg.taylor_terms < 0) throw UsageError("--taylor-terms must be >= 0");

  if (cfg.command == "verify") return run_verify(cfg, format, std::cout);
  require_n(cfg);
  if (cfg.command == "decompose") {
    if (cfg.m_min < 0) throw UsageError("--m-min must be >= 0");
    std::cout << render_decompose(decompose_table(cfg.n, cfg.m_min, cfg.m_max), format);
  } else if (cfg.command == "series") {
    std::cout << render_series(cfg.n, format);
  } else if (cfg.command == "taylor") {
    RationalFunction f;
    std::string name;
    if (cfg.series == "weighted" || cfg.series == "unweighted") {
      f = total_series(cfg.n, cfg.series == "weighted");
      name = "total_" + cfg.series;
    } else if (cfg.series == "label") {
      IrrepLabel label;
      try {
        label = find_irrep(cfg.n, cfg.kappa, cfg.lambda, parse_rho(cfg.rho));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      f = isotypic_series(cfg.n, label);
      name = to_string(label);
    } else {
      throw UsageError("--series must be weighted, unweighted or label");
    }
    std::cout << render_taylor(name, f, cfg.taylor_terms, format);
  } else if (cfg.command == "irreps") {
    std::cout << render_irreps(cfg.n, format);
  } else if (cfg.command == "lattice-probe") {
    std::cout << lattice_probe(cfg, format);
  } else {
    throw UsageError("unknown command: " + cfg.command);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Module structure of polydifferentials on Fermat curves"};
  CliConfig cfg;
  app.add_option("--n", cfg.n, "Fermat degree (>= 4); optional for verify");
  app.add_option("--command", cfg.command, "Operation to run")
      ->required()
      ->check(CLI::IsMember({"decompose", "series", "taylor", "verify", "lattice-probe", "irreps"}));
  app.add_option("--m-min", cfg.m_min, "First tensor power")->capture_default_str();
  app.add_option("--m-max", cfg.m_max, "Last tensor power")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--taylor-terms", cfg.taylor_terms, "Number of Taylor coefficients")->capture_default_str();
  app.add_option("--oracle-bound", cfg.oracle_bound, "Largest n the oracle will run on")->capture_default_str();
  app.add_option("--series", cfg.series, "taylor: weighted, unweighted or label")->capture_default_str();
  app.add_option("--kappa", cfg.kappa, "taylor --series label: kappa");
  app.add_option("--lambda", cfg.lambda, "taylor --series label: lambda");
  app.add_option("--rho", cfg.rho, "taylor --series label: triv, sgn or stan")->capture_default_str();
  app.add_option("--m", cfg.m, "lattice-probe: tensor power");
  app.add_option("--x", cfg.x, "lattice-probe: X shift");
  app.add_option("--y", cfg.y, "lattice-probe: Y shift");
  app.footer("Environment: FERMAT_REPS_THREADS caps the oracle worker threads.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
}
