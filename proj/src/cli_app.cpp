#include "spingeo/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "spingeo/curvature.hpp"
#include "spingeo/dicke.hpp"
#include "spingeo/dynamics.hpp"
#include "spingeo/model.hpp"
#include "spingeo/phases.hpp"
#include "spingeo/two_spin.hpp"
#include "spingeo/verify.hpp"

namespace spingeo {

namespace {

const std::vector<std::string> kFigureIds = {
    "curvature_theta", "aa_theta", "speed_theta", "k_of_c", "phig_of_c",
    "aa_of_c",         "v_of_c",   "s_of_c",      "tau_of_c"};

bool is_theta_figure(const std::string& id) {
  return id == "curvature_theta" || id == "aa_theta" || id == "speed_theta";
}

std::string series_label(const std::string& prefix, double v) {
  // integral series values print without a trailing ".0" (N=2, xi=1 but xi=0.5)
  if (v == std::floor(v) && std::abs(v) < 1e15)
    return prefix + "=" + std::to_string(static_cast<long long>(v));
  return prefix + "=" + format_double(v);
}

CsvTable theta_figure(const std::string& id, const FigureConfig& cfg) {
  CsvTable t;
  t.header.push_back("theta");
  for (int n : cfg.n_list) t.header.push_back(series_label("N", n));
  const int last = cfg.theta_points - 1;
  for (int k = 0; k <= last; ++k) {
    const double th = kPi * (static_cast<double>(k) / last);
    std::vector<std::optional<double>> row{th};
    for (int n : cfg.n_list) {
      ModelParams p{n, th, 0.0, cfg.coupling};
      if (id == "curvature_theta") {
        if (k == 0 || k == last)
          row.emplace_back(std::nullopt);  // conical points, curvature undefined
        else
          row.emplace_back(gaussian_curvature_closed(p));
      } else if (id == "aa_theta") {
        row.emplace_back(aa_phase_closed(p));
      } else {
        row.emplace_back(speed_closed(p));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable concurrence_figure(const std::string& id, const FigureConfig& cfg) {
  CsvTable t;
  t.header.push_back("C");
  std::vector<double> caps;  // per-series admissible maximum
  double c_max = 0.0;
  for (double xi : cfg.xi_list) {
    const double cap = std::min(1.0, std::abs(std::sin(xi)));
    caps.push_back(cap);
    c_max = std::max(c_max, cap);
    t.header.push_back(series_label("xi", xi));
  }
  const int last = cfg.c_points - 1;
  for (int k = 0; k <= last; ++k) {
    const double c = c_max * (static_cast<double>(k) / last);
    std::vector<std::optional<double>> row{c};
    for (std::size_t i = 0; i < cfg.xi_list.size(); ++i) {
      const double xi = cfg.xi_list[i];
      if (c > caps[i] * (1.0 + 1e-14) + 1e-14) {
        row.emplace_back(std::nullopt);
        continue;
      }
      const double cc = std::min(c, caps[i]);
      if (id == "k_of_c") row.emplace_back(curvature_of_concurrence(cc, xi));
      else if (id == "phig_of_c") row.emplace_back(geometric_phase_of_concurrence(cc, xi));
      else if (id == "aa_of_c") row.emplace_back(aa_phase_of_concurrence(cc, xi));
      else if (id == "v_of_c") row.emplace_back(speed_of_concurrence(cc, xi, cfg.coupling));
      else if (id == "s_of_c") row.emplace_back(distance_of_concurrence(cc, xi));
      else row.emplace_back(optimal_time_of_concurrence(cc, xi, cfg.coupling));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

GridSpec parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  const std::string body = eq == std::string::npos ? text : text.substr(eq + 1);
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  if (std::sscanf(body.c_str(), "%lf%c%lf%c%d", &g.lo, &colon1, &g.hi, &colon2, &g.count) != 5 ||
      colon1 != ':' || colon2 != ':')
    throw std::invalid_argument("grid must look like name=min:max:count, got: " + text);
  if (g.count < 2) throw std::invalid_argument("grid count must be >= 2, got: " + text);
  if (!(g.hi > g.lo)) throw std::invalid_argument("grid needs max > min, got: " + text);
  return g;
}

std::vector<double> grid_values(const GridSpec& g) {
  std::vector<double> v(g.count);
  for (int i = 0; i < g.count; ++i)
    v[i] = g.lo + (g.hi - g.lo) * (static_cast<double>(i) / (g.count - 1));
  return v;
}

JsonValue table_to_json(const CsvTable& t) {
  JsonValue rows = JsonValue::array();
  for (const auto& row : t.rows) {
    JsonValue obj = JsonValue::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      if (row[i]) obj.add(t.header[i], JsonValue::number(*row[i]));
    }
    rows.push(std::move(obj));
  }
  return rows;
}

struct CliConfig {
  std::string command = "verify";
  std::vector<int> n_list;
  double coupling = 1.0;
  std::vector<std::string> grids;
  std::vector<double> xi_list;
  std::string figure;
  std::string quantity;
  std::string out_dir;
  std::string format = "csv";
  std::vector<std::string> tol_overrides;
};

std::filesystem::path resolve_out_dir(const CliConfig& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv("SPINGEO_OUT"); env && *env) return env;
  return ".";
}

void write_table(const CsvTable& t, const std::filesystem::path& dir, const std::string& stem,
                 const std::string& format) {
  std::filesystem::create_directories(dir);
  if (format == "json") {
    write_text_file((dir / (stem + ".json")).string(), table_to_json(t).dump());
    std::cout << (dir / (stem + ".json")).string() << "\n";
  } else {
    write_text_file((dir / (stem + ".csv")).string(), to_csv(t));
    std::cout << (dir / (stem + ".csv")).string() << "\n";
  }
}

int cmd_verify(const CliConfig& cfg) {
  VerifyOptions opts;
  for (const auto& item : cfg.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tolerance override must look like name=value: " + item);
    opts.tolerance_overrides[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  const VerifyReport report = run_verification(opts);
  const auto dir = resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  const auto path = dir / "verify_report.json";
  write_text_file(path.string(), report_to_json(report).dump());
  for (const auto& c : report.checks)
    std::cout << "[" << c.status << "] " << c.name << "\n";
  std::cout << path.string() << "\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_figure(const CliConfig& cfg) {
  FigureConfig fig;
  if (!cfg.n_list.empty()) fig.n_list = cfg.n_list;
  if (!cfg.xi_list.empty()) fig.xi_list = cfg.xi_list;
  fig.coupling = cfg.coupling;
  std::vector<std::string> wanted =
      cfg.figure.empty() ? kFigureIds : std::vector<std::string>{cfg.figure};
  const auto dir = resolve_out_dir(cfg);
  for (const auto& id : wanted)
    write_table(figure_table(id, fig), dir, "figure_" + id, "csv");
  return 0;
}

int cmd_sweep(const CliConfig& cfg) {
  if (cfg.quantity.empty()) throw std::invalid_argument("sweep needs --quantity");
  std::map<std::string, GridSpec> grids;
  for (const auto& g : cfg.grids) {
    const auto eq = g.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid must look like name=min:max:count: " + g);
    grids[g.substr(0, eq)] = parse_grid(g);
  }
  const int n = cfg.n_list.empty() ? 2 : cfg.n_list.front();
  const double j = cfg.coupling;

  const bool needs_xi = cfg.quantity == "concurrence" || cfg.quantity == "geometric_phase";
  if (!grids.count("theta")) throw std::invalid_argument("sweep needs --grid theta=min:max:count");
  if (needs_xi && !grids.count("xi"))
    throw std::invalid_argument("sweep of " + cfg.quantity + " needs --grid xi=min:max:count");

  CsvTable t;
  const auto thetas = grid_values(grids.at("theta"));
  auto eval_theta = [&](double th) -> double {
    ModelParams p{n, th, 0.0, j};
    if (cfg.quantity == "speed") return speed_closed(p);
    if (cfg.quantity == "curvature") return gaussian_curvature_closed(p);
    if (cfg.quantity == "aa_phase") return aa_phase_closed(p);
    throw std::invalid_argument("unknown quantity: " + cfg.quantity);
  };
  if (!needs_xi) {
    t.header = {"theta", cfg.quantity};
    for (double th : thetas) t.rows.push_back({th, eval_theta(th)});
  } else {
    t.header = {"theta", "xi", cfg.quantity};
    const auto xis = grid_values(grids.at("xi"));
    for (double th : thetas) {
      for (double xi : xis) {
        double v;
        if (cfg.quantity == "concurrence") {
          if (n != 2) throw std::invalid_argument("concurrence sweep is a two-spin quantity");
          v = concurrence_closed(th, xi);
        } else {
          v = geometric_phase({n, th, 0.0, j}, xi).geometric;
        }
        t.rows.push_back({th, xi, v});
      }
    }
  }
  write_table(t, resolve_out_dir(cfg), "sweep_" + cfg.quantity, cfg.format);
  return 0;
}

int cmd_brachistochrone(const CliConfig& cfg) {
  std::vector<int> ns = cfg.n_list.empty() ? std::vector<int>{2, 3, 4, 5, 8, 16, 32} : cfg.n_list;
  const auto dir = resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  if (cfg.format == "csv") {
    CsvTable t;
    t.header = {"N", "theta_max", "v_max", "s_min_per_xi", "t_min_over_t"};
    for (int n : ns) {
      const Brachistochrone b = brachistochrone(n, cfg.coupling);
      t.rows.push_back({static_cast<double>(n), b.theta_max, b.v_max, b.s_min_per_xi,
                        b.t_min_over_t});
    }
    write_table(t, dir, "brachistochrone", "csv");
  } else {
    JsonValue arr = JsonValue::array();
    for (int n : ns) {
      const Brachistochrone b = brachistochrone(n, cfg.coupling);
      JsonValue rec = JsonValue::object();
      rec.add("N", JsonValue::integer(n));
      rec.add("theta_max", JsonValue::number(b.theta_max));
      rec.add("v_max", JsonValue::number(b.v_max));
      rec.add("s_min_per_xi", JsonValue::number(b.s_min_per_xi));
      rec.add("t_min_over_t", JsonValue::number(b.t_min_over_t));
      arr.push(std::move(rec));
    }
    const auto path = dir / "brachistochrone.json";
    write_text_file(path.string(), arr.dump());
    std::cout << path.string() << "\n";
  }
  return 0;
}

int cmd_two_spin(const CliConfig& cfg) {
  const double xi = cfg.xi_list.empty() ? 1.0 : cfg.xi_list.front();
  if (std::abs(std::sin(xi)) < 1e-12)
    throw std::invalid_argument("two-spin table needs sin(xi) != 0");
  const double cap = std::min(1.0, std::abs(std::sin(xi)));
  CsvTable t;
  t.header = {"C",     "curvature", "geometric_phase", "aa_phase",
              "speed", "distance",  "optimal_time",    "curvature_negative"};
  const int pts = 501;
  for (int k = 0; k < pts; ++k) {
    const double c = cap * (static_cast<double>(k) / (pts - 1));
    t.rows.push_back({c, curvature_of_concurrence(c, xi), geometric_phase_of_concurrence(c, xi),
                      aa_phase_of_concurrence(c, xi), speed_of_concurrence(c, xi, cfg.coupling),
                      distance_of_concurrence(c, xi),
                      optimal_time_of_concurrence(c, xi, cfg.coupling),
                      negativity_condition(c, xi) ? 1.0 : 0.0});
  }
  write_table(t, resolve_out_dir(cfg), "two_spin", cfg.format);
  return 0;
}

}  // namespace

const std::vector<std::string>& figure_ids() { return kFigureIds; }

CsvTable figure_table(const std::string& figure_id, const FigureConfig& config) {
  if (std::find(kFigureIds.begin(), kFigureIds.end(), figure_id) == kFigureIds.end())
    throw std::invalid_argument("unknown figure id: " + figure_id);
  if (config.theta_points < 2 || config.c_points < 2)
    throw std::invalid_argument("figure grids need at least 2 points");
  return is_theta_figure(figure_id) ? theta_figure(figure_id, config)
                                    : concurrence_figure(figure_id, config);
}

int run_cli(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"exact geometry, phases and entanglement of N uniformly coupled spin-1/2 "
               "particles"};
  app.add_option("--command", cfg.command, "verify | figure | sweep | brachistochrone | two-spin")
      ->check(CLI::IsMember({"verify", "figure", "sweep", "brachistochrone", "two-spin"}));
  app.add_option("--n", cfg.n_list, "particle numbers (repeatable)");
  app.add_option("--coupling", cfg.coupling, "coupling J > 0")->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grids, "axis grid, e.g. theta=0:3.14159:181 (repeatable)");
  app.add_option("--xi", cfg.xi_list, "dimensionless times J*t (repeatable)");
  app.add_option("--figure", cfg.figure, "figure id; omit to emit all nine");
  app.add_option("--quantity", cfg.quantity,
                 "sweep quantity: speed | curvature | aa_phase | concurrence | geometric_phase");
  app.add_option("--out", cfg.out_dir, "output directory (default $SPINGEO_OUT or .)");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", cfg.tol_overrides, "verification tolerance override name=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0; anything else is a config error
  }

  try {
    for (int n : cfg.n_list)
      ModelParams{n, 0.0, 0.0, cfg.coupling}.validate();
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "figure") return cmd_figure(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "brachistochrone") return cmd_brachistochrone(cfg);
    return cmd_two_spin(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spingeo
