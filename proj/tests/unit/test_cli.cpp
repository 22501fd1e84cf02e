#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <doctest.h>

#include "geophase/qcore.hpp"
#include "geophase_tools/config.hpp"
#include "geophase_tools/experiments.hpp"
#include "geophase_tools/table.hpp"

using namespace geophase;
using namespace geophase::tools;

namespace {

Json foucault_config() {
  return Json::parse(R"({
    "experiment": "foucault",
    "params": {"colatitude": {"start": 0.5, "stop": 1.5, "count": 4}, "periods": 12.0},
    "seed": 3
  })");
}

double first(const ResultTable& t, const std::string& column) {
  return t.numeric_column(column).front();
}

}  // namespace

TEST_CASE("registry") {
  CHECK(registry().size() == 11);
  std::set<std::string> names;
  for (const auto& e : registry()) {
    names.insert(e.schema.name);
    CHECK(find_experiment(e.schema.name) == &e);
    const ExperimentConfig cfg = validate_config(e.example, e.schema);
    CHECK(cfg.experiment == e.schema.name);
    for (const auto& p : e.schema.params) CHECK(cfg.params.contains(p.name));
    CHECK(validate_config(Json::parse(e.example.dump()), e.schema).params == cfg.params);
  }
  CHECK(names.size() == 11);
  CHECK(find_experiment("nope") == nullptr);
}

TEST_CASE("unknown keys are schema errors") {
  std::mt19937_64 rng(17);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz_";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (const auto& e : registry()) {
    for (int i = 0; i < 20; ++i) {
      std::string key = "x";
      for (int k = 0; k < 6; ++k) key += alphabet[pick(rng)];
      Json top = e.example;
      top[key] = 1;
      CHECK_THROWS_AS(validate_config(top, e.schema), SchemaError);
      Json inner = e.example;
      inner["params"][key] = 1;
      CHECK_THROWS_AS(validate_config(inner, e.schema), SchemaError);
    }
  }
}

TEST_CASE("malformed configs") {
  const Experiment& e = *find_experiment("foucault");
  Json cfg = foucault_config();
  cfg["params"]["periods"] = "many";
  CHECK_THROWS_AS(validate_config(cfg, e.schema), SchemaError);
  cfg = foucault_config();
  cfg["seed"] = -1;
  CHECK_THROWS_AS(validate_config(cfg, e.schema), SchemaError);
  cfg = foucault_config();
  cfg["workers"] = 0;
  CHECK_THROWS_AS(validate_config(cfg, e.schema), SchemaError);
  cfg = foucault_config();
  cfg["params"]["colatitude"] = {{"start", 0.1}, {"stop", 0.2}};
  CHECK_THROWS_AS(validate_config(cfg, e.schema), SchemaError);
  CHECK_THROWS_AS(prepare_config(Json::parse(R"({"experiment": "nope"})")), SchemaError);
  CHECK_THROWS_AS(prepare_config(Json::parse("[1, 2]")), SchemaError);
}

TEST_CASE("sweep values") {
  const Sweep s{0.0, 1.0, 5};
  const auto v = s.values();
  REQUIRE(v.size() == 5);
  CHECK(v[2] == 0.5);
  CHECK(v.back() == 1.0);
  CHECK(Sweep{0.3, 9.0, 1}.values() == std::vector<double>{0.3});
}

TEST_CASE("sweep order does not depend on workers") {
  const Experiment& e = *find_experiment("foucault");
  ExperimentConfig cfg = validate_config(foucault_config(), e.schema);
  const ResultTable serial = run_experiment(cfg, e);
  cfg.workers = 3;
  const ResultTable parallel = run_experiment(cfg, e);
  CHECK(max_numeric_difference(serial, parallel) == 0.0);
  const auto col = serial.numeric_column("colatitude");
  REQUIRE(col.size() == 4);
  for (std::size_t k = 1; k < col.size(); ++k) CHECK(col[k] > col[k - 1]);
  CHECK(point_seed(3, 0) != point_seed(3, 1));
  CHECK(point_seed(3, 2) == point_seed(3, 2));
}

TEST_CASE("numbers survive the csv round trip") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
  CHECK(std::strtod(format_number(kPi).c_str(), nullptr) == kPi);
}

TEST_CASE("csv layout") {
  ResultTable t({"a", "b", "label"});
  t.set_meta("seed", "4");
  t.add_row({0.1, std::int64_t{3}, std::string("x,y")});
  CHECK_THROWS(t.add_row({1.0}));
  std::ostringstream out;
  write_csv(out, t);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "# seed: 4");
  std::getline(in, line);
  CHECK(line == "a,b,label");
  std::getline(in, line);
  CHECK(line == "0.10000000000000001,3,\"x,y\"");
}

TEST_CASE("mzi example") {
  const ResultTable t = run_config(find_experiment("mzi")->example);
  CHECK(std::abs(first(t, "fitted_phase") - kPi / 6.0) < 1e-12);
  CHECK(std::abs(first(t, "fitted_visibility") - std::cos(kPi / 6.0)) < 1e-12);
}

TEST_CASE("pancharatnam example") {
  const ResultTable t = run_config(find_experiment("pancharatnam")->example);
  CHECK(std::abs(first(t, "pancharatnam_phase") - kPi / 4.0) < 1e-12);
  CHECK(std::abs(first(t, "loop_phase") - kPi / 4.0) < 1e-4);
}

TEST_CASE("foucault at the equator") {
  Json cfg = Json::parse(R"({"experiment": "foucault", "params": {"colatitude": 1.5707963267948966, "periods": 20.0}})");
  const ResultTable t = run_config(cfg);
  CHECK(std::abs(first(t, "measured_rate")) < 1e-12);
  CHECK(std::abs(first(t, "precession_angle")) < 1e-10);
}

TEST_CASE("metadata header") {
  const ResultTable t = run_config(find_experiment("ab-phase")->example);
  std::set<std::string> keys;
  for (const auto& [k, v] : t.metadata()) keys.insert(k);
  for (const char* k : {"tool", "experiment", "seed", "workers", "config", "resolved_params"})
    CHECK(keys.count(k) == 1);
}
