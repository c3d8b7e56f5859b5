#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "limitlab/errors.hpp"
#include "limitlab/experiment.hpp"
#include "limitlab/simulate.hpp"

using namespace limitlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json load(const std::string& name) {
  std::ifstream in(fs::path(LIMITLAB_CONFIG_DIR) / name);
  return json::parse(in);
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("limitlab_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string config_error_field(const json& j) {
  try {
    parse_config(j);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

json simulate_json() {
  return json::parse(R"({
    "alphabet": "a", "experiment": "simulate",
    "learner": {"kind": "range"},
    "metric": {"kind": "counting", "L_inf": {"kind": "pattern", "pattern": "a+"}},
    "target": {"kind": "pattern", "pattern": "a+"},
    "text": {"kind": "canonical"},
    "horizon": 100
  })");
}
}  // namespace

TEST_CASE("every shipped config parses and round-trips unchanged") {
  for (const auto& entry : fs::directory_iterator(LIMITLAB_CONFIG_DIR)) {
    CAPTURE(entry.path().string());
    const auto original = parse_config(load(entry.path().filename().string()));
    const auto echoed = to_json(original);
    CHECK(to_json(parse_config(echoed)) == echoed);
  }
}

TEST_CASE("malformed configs name the offending field") {
  auto j = simulate_json();
  j["epsilon"] = 0;
  CHECK(config_error_field(j) == "epsilon");
  j["epsilon"] = "-1/2";
  CHECK(config_error_field(j) == "epsilon");

  j = simulate_json();
  j["horizon"] = 0;
  CHECK(config_error_field(j) == "horizon");

  j = simulate_json();
  j.erase("learner");
  CHECK(config_error_field(j) == "learner");

  j = simulate_json();
  j["colour"] = "blue";
  CHECK(config_error_field(j) == "colour");

  j = simulate_json();
  j["experiment"] = "teleport";
  CHECK(config_error_field(j) == "experiment");

  j = simulate_json();
  j["target"] = {{"kind", "finite"}, {"words", {"ab"}}};
  CHECK(config_error_field(j).starts_with("target"));

  j = simulate_json();
  j["target"] = {{"kind", "pattern"}, {"pattern", "(a"}};
  CHECK(config_error_field(j).starts_with("target"));

  j = simulate_json();
  j["metric"] = {{"kind", "symdiff"}, {"base", 1}};
  CHECK(config_error_field(j).starts_with("metric"));
}

TEST_CASE("running a simulate config") {
  const auto out = scratch("simulate");
  RunOptions opts;
  opts.out_dir = out.string();
  const auto outcome = run_experiment(parse_config(simulate_json()), opts);
  REQUIRE(outcome.exit_code == kExitOk);
  const auto csv = slurp(out / "trace.csv");
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.starts_with("#")) rows.push_back(line);
  }
  REQUIRE(rows.size() == 101);
  CHECK(rows.front() == kTraceCsvHeader);
  CHECK(rows.back() == "100,finite,100,0.01,0.01,1,");
  CHECK(outcome.report.find("final distance: 1/100") != std::string::npos);
  CHECK(parse_config(json::parse(slurp(out / "config.json"))).horizon == 100u);
}

TEST_CASE("module errors surface with a non-zero exit and context") {
  auto j = simulate_json();
  j["text"] = {{"kind", "locking_prefix"}, {"prefix", {"aa", "a"}}};
  j["target"] = {{"kind", "finite"}, {"words", {"a"}}};
  RunOptions opts;
  opts.out_dir = scratch("domain").string();
  const auto outcome = run_experiment(parse_config(j), opts);
  CHECK(outcome.exit_code == kExitDomain);
  CHECK(outcome.error.starts_with("simulate: "));
}

TEST_CASE("telltale config for the Gold family") {
  RunOptions opts;
  opts.out_dir = scratch("telltale").string();
  const auto outcome = run_experiment(parse_config(load("telltale_gold.json")), opts);
  REQUIRE(outcome.exit_code == kExitOk);
  CHECK(outcome.report.find("NOT_LEARNABLE") != std::string::npos);
}

TEST_CASE("seed override reaches random texts") {
  const auto base = parse_config(load("simulate_exact_random.json"));
  RunOptions a{scratch("seed_a").string(), 11};
  RunOptions b{scratch("seed_b").string(), 12};
  REQUIRE(run_experiment(base, a).exit_code == kExitOk);
  REQUIRE(run_experiment(base, b).exit_code == kExitOk);
  CHECK(slurp(fs::path(*a.out_dir) / "trace.csv") != slurp(fs::path(*b.out_dir) / "trace.csv"));
  CHECK(slurp(fs::path(*a.out_dir) / "config.json").find("\"seed\": 11") != std::string::npos);
}

TEST_CASE("catalog") {
  const auto catalog = list_builtins();
  CHECK(catalog.find("counting") != std::string::npos);
  CHECK(catalog.find("range") != std::string::npos);
  CHECK(catalog == list_builtins());
}

TEST_CASE("command-line entry point") {
  const std::string cli = LIMITLAB_CLI;
  const auto out = scratch("cli");
  const auto cfg = (fs::path(LIMITLAB_CONFIG_DIR) / "chain_counting.json").string();
  const auto quiet = " > " + (out.string() + ".log") + " 2>&1";
  CHECK(std::system((cli + " run " + cfg + " --out " + out.string() + quiet).c_str()) == 0);
  CHECK(slurp(out / "chain.csv").starts_with("n,distance_lo,distance_hi\n"));
  CHECK(slurp(out / "report.txt").find("VERDICT CONVERGING") != std::string::npos);

  // ε = 0 must fail before anything runs
  const auto bad = out.string() + "_bad.json";
  auto j = load("locking_search.json");
  j["epsilon"] = 0;
  std::ofstream(bad) << j.dump();
  const int status = std::system((cli + " run " + bad + " --out " + out.string() + "_bad" + quiet).c_str());
  CHECK(status != 0);
  CHECK(slurp(out.string() + ".log").find("epsilon") != std::string::npos);

  CHECK(std::system((cli + " run /nonexistent.json" + quiet).c_str()) != 0);
  CHECK(std::system((cli + " list" + quiet).c_str()) == 0);
}
