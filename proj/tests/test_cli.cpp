#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "spingeo/cli_app.hpp"
#include "spingeo/io_format.hpp"
#include "spingeo/model.hpp"

using namespace spingeo;
namespace fs = std::filesystem;

namespace {

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spingeo");
  std::vector<char*> argv;
  argv.reserve(args.size());
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "spingeo_cli_tests" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

}  // namespace

TEST_CASE("number formatting survives a round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(HUGE_VAL) == "inf");
  CHECK(format_double(-HUGE_VAL) == "-inf");
  const double v = 1.0 / 3.0;
  CHECK(std::stod(format_double(v)) == v);  // 17 significant digits are lossless
}

TEST_CASE("csv serialization") {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{1.0, std::nullopt}, {0.25, -3.0}};
  CHECK(to_csv(t) == "a,b\n1,\n0.25,-3\n");
  t.rows.push_back({1.0});
  CHECK_THROWS_AS(to_csv(t), std::invalid_argument);
}

TEST_CASE("json tree dumps with stable key order") {
  JsonValue obj = JsonValue::object();
  obj.add("z", JsonValue::integer(1));
  obj.add("a", JsonValue::string("x\"y"));
  JsonValue arr = JsonValue::array();
  arr.push(JsonValue::number(0.5));
  arr.push(JsonValue::boolean(true));
  obj.add("list", std::move(arr));
  const std::string s = obj.dump();
  CHECK(s.find("\"z\"") < s.find("\"a\""));  // insertion order, not sorted
  CHECK(s.find("\\\"") != std::string::npos);
  CHECK(s.back() == '\n');
  const auto parsed = nlohmann::json::parse(s);
  CHECK(parsed["z"] == 1);
  CHECK(parsed["a"] == "x\"y");
  CHECK(parsed["list"][0] == 0.5);
  CHECK(parsed["list"][1] == true);
  CHECK(JsonValue::number(std::nan("")).dump().substr(0, 4) == "null");
}

TEST_CASE("figure tables: ids, shape, and pinned values") {
  CHECK(figure_ids().size() == 9);
  CHECK_THROWS_AS(figure_table("bogus"), std::invalid_argument);

  const CsvTable k = figure_table("curvature_theta");
  CHECK(join(k.header) == "theta,N=2,N=3,N=4,N=5");
  REQUIRE(k.rows.size() == 721);
  CHECK(k.rows[0][0] == 0.0);
  CHECK(*k.rows[720][0] == doctest::Approx(kPi));
  for (size_t col = 1; col <= 4; ++col) {
    CHECK_FALSE(k.rows[0][col].has_value());    // conical poles stay empty
    CHECK_FALSE(k.rows[720][col].has_value());
  }
  CHECK(*k.rows[360][0] == kPi / 2);  // grid hits the equator exactly
  CHECK(*k.rows[360][1] == doctest::Approx(0.0));          // N = 2 is flat there
  CHECK(*k.rows[360][2] == doctest::Approx(-8.0 / 3.0));   // (8/N)(2-N)

  const CsvTable aa = figure_table("aa_theta");
  for (size_t col = 1; col < aa.header.size(); ++col) {
    double lo = 0.0;
    for (const auto& row : aa.rows) lo = std::min(lo, row[col].value());
    const double n = 1.0 + col;  // series are N = 2..5
    CHECK(lo == doctest::Approx(-kPi / 2 * n * (n - 1)).epsilon(1e-12));
  }

  const CsvTable kc = figure_table("k_of_c");
  CHECK(kc.header[0] == "C");
  for (size_t col = 1; col < kc.header.size(); ++col) {
    CHECK(*kc.rows[0][col] == doctest::Approx(5.0).epsilon(1e-14));  // K(C=0) = 5
  }
}

TEST_CASE("verify command writes a parseable report and exits 0") {
  const fs::path dir = fresh_dir("verify");
  CHECK(cli({"--command", "verify", "--out", dir.string()}) == 0);
  const auto rep = nlohmann::json::parse(slurp(dir / "verify_report.json"));
  CHECK(rep["schema"] == 1);
  CHECK(rep["failures"] == 0);
  REQUIRE(rep["checks"].is_array());
  CHECK(rep["checks"].size() >= 30);
  for (const auto& c : rep["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("claim"));
    CHECK(c.contains("measured"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("tolerance"));
    CHECK((c["status"] == "pass" || c["status"] == "discrepancy-documented"));
  }
  // rerun is byte-identical (deterministic output, timings excluded)
  const std::string first = slurp(dir / "verify_report.json");
  CHECK(cli({"--command", "verify", "--out", dir.string()}) == 0);
  CHECK(slurp(dir / "verify_report.json") == first);
}

TEST_CASE("tightening a tolerance group forces a reported failure") {
  const fs::path dir = fresh_dir("verify_tight");
  CHECK(cli({"--command", "verify", "--out", dir.string(), "--tol", "metric=1e-12"}) == 1);
  const auto rep = nlohmann::json::parse(slurp(dir / "verify_report.json"));
  CHECK(rep["failures"].get<int>() > 0);
  CHECK(cli({"--command", "verify", "--out", dir.string(), "--tol", "metric"}) == 2);
}

TEST_CASE("figure command emits all nine tables, reproducibly") {
  const fs::path a = fresh_dir("fig_a");
  const fs::path b = fresh_dir("fig_b");
  CHECK(cli({"--command", "figure", "--out", a.string()}) == 0);
  int found = 0;
  for (const auto& id : figure_ids())
    if (fs::exists(a / ("figure_" + id + ".csv"))) ++found;
  CHECK(found == 9);
  CHECK(cli({"--command", "figure", "--out", b.string()}) == 0);
  for (const auto& id : figure_ids()) {
    const std::string f = "figure_" + id + ".csv";
    CHECK(slurp(a / f) == slurp(b / f));
  }
  CHECK(cli({"--command", "figure", "--figure", "nope", "--out", a.string()}) == 2);
}

TEST_CASE("speed sweep peaks at J/2 for two spins") {
  const fs::path dir = fresh_dir("sweep");
  CHECK(cli({"--command", "sweep", "--quantity", "speed", "--grid", "theta=0:3.141592653589793:181",
             "--out", dir.string()}) == 0);
  std::istringstream in(slurp(dir / "sweep_speed.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,speed");
  double vmax = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    vmax = std::max(vmax, std::stod(line.substr(line.find(',') + 1)));
  }
  CHECK(rows == 181);
  CHECK(vmax == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sweep configuration errors exit 2") {
  const fs::path dir = fresh_dir("sweep_err");
  const std::string out = dir.string();
  CHECK(cli({"--command", "sweep", "--quantity", "speed", "--out", out}) == 2);  // no grid
  CHECK(cli({"--command", "sweep", "--quantity", "speed", "--grid", "theta=0:1:1", "--out", out}) == 2);
  CHECK(cli({"--command", "sweep", "--quantity", "wobble", "--grid", "theta=0:1:5", "--out", out}) == 2);
  CHECK(cli({"--command", "sweep", "--grid", "theta=0:1:5", "--out", out}) == 2);  // no quantity
  CHECK(cli({"--command", "sweep", "--quantity", "concurrence", "--n", "3", "--grid", "theta=0:1:5",
             "--grid", "xi=0:1:5", "--out", out}) == 2);
  CHECK(cli({"--command", "sweep", "--quantity", "concurrence", "--grid", "theta=0:1:5", "--out",
             out}) == 2);  // missing xi grid
  CHECK(cli({"--command", "dance", "--out", out}) == 2);          // unknown command
  CHECK(cli({"--command", "verify", "--coupling", "-1", "--out", out}) == 2);
  CHECK(cli({"--command", "verify", "--n", "0", "--out", out}) == 2);
}

TEST_CASE("brachistochrone summary in json") {
  const fs::path dir = fresh_dir("brach");
  CHECK(cli({"--command", "brachistochrone", "--format", "json", "--n", "2", "--n", "3", "--out",
             dir.string()}) == 0);
  const auto arr = nlohmann::json::parse(slurp(dir / "brachistochrone.json"));
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["N"] == 2);
  CHECK(arr[0]["t_min_over_t"] == doctest::Approx(1.0));
  CHECK(arr[1]["t_min_over_t"] == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(arr[1]["theta_max"] == doctest::Approx(std::asin(std::sqrt(2.0 / 3.0))).epsilon(1e-8));
}

TEST_CASE("two-spin table") {
  const fs::path dir = fresh_dir("two_spin");
  CHECK(cli({"--command", "two-spin", "--xi", "1.0", "--out", dir.string()}) == 0);
  std::istringstream in(slurp(dir / "two_spin.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "C,curvature,geometric_phase,aa_phase,speed,distance,optimal_time,curvature_negative");
  std::getline(in, line);
  CHECK(line.substr(0, 4) == "0,5,");  // K(C = 0) = 5
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 501);
  CHECK(cli({"--command", "two-spin", "--xi", "0", "--out", dir.string()}) == 2);  // sin xi = 0
}

TEST_CASE("default output directory comes from the environment") {
  const fs::path dir = fresh_dir("env_out");
  setenv("SPINGEO_OUT", dir.string().c_str(), 1);
  const int rc = cli({"--command", "brachistochrone"});
  unsetenv("SPINGEO_OUT");
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "brachistochrone.csv"));
}

TEST_CASE("help exits 0") {
  CHECK(cli({"--help"}) == 0);
}
