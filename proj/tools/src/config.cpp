#include "geophase_tools/config.hpp"

#include <algorithm>
#include <set>

namespace geophase::tools {

const ParamSpec* ExperimentSchema::find(const std::string& key) const {
  for (const auto& p : params) {
    if (p.name == key) return &p;
  }
  return nullptr;
}

std::string to_string(ParamType t) {
  switch (t) {
    case ParamType::kNumber: return "number";
    case ParamType::kInteger: return "integer";
    case ParamType::kString: return "string";
    case ParamType::kNumberList: return "number-list";
    case ParamType::kComplexMatrix: return "complex-matrix";
    case ParamType::kComplexStates: return "complex-states";
  }
  return "unknown";
}

Json ExperimentSchema::to_json() const {
  Json ps = Json::array();
  for (const auto& p : params) {
    Json j{{"name", p.name},
           {"type", to_string(p.type)},
           {"required", p.default_value.is_null()},
           {"sweepable", p.sweepable},
           {"overridable", p.overridable},
           {"description", p.description}};
    if (!p.default_value.is_null()) j["default"] = p.default_value;
    if (!p.choices.empty()) j["choices"] = p.choices;
    ps.push_back(std::move(j));
  }
  return Json{{"name", name}, {"description", description}, {"params", ps}, {"columns", columns}};
}

std::vector<double> Sweep::values() const {
  std::vector<double> v(count);
  for (std::size_t k = 0; k < count; ++k) {
    v[k] = count == 1 ? start
                      : start + (stop - start) * static_cast<double>(k) /
                                    static_cast<double>(count - 1);
  }
  return v;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

bool is_complex_entry(const Json& e) {
  if (e.is_number()) return true;
  return e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number();
}

bool is_sweep(const Json& v) { return v.is_object(); }

Sweep parse_sweep(const std::string& where, const Json& v) {
  static const std::set<std::string> keys{"start", "stop", "count"};
  for (const auto& [k, _] : v.items()) {
    if (!keys.count(k)) fail(where, "unknown sweep key '" + k + "'");
  }
  for (const auto& k : keys) {
    if (!v.contains(k)) fail(where, "sweep needs start, stop and count");
  }
  if (!v["start"].is_number() || !v["stop"].is_number()) fail(where, "sweep bounds must be numbers");
  if (!v["count"].is_number_integer() || v["count"].get<std::int64_t>() < 1 ||
      v["count"].get<std::int64_t>() > 100000) {
    fail(where, "sweep count must be an integer in [1, 100000]");
  }
  return {v["start"].get<double>(), v["stop"].get<double>(), v["count"].get<std::size_t>()};
}

void check_value(const std::string& where, const ParamSpec& spec, const Json& v) {
  if (spec.sweepable && is_sweep(v)) {
    parse_sweep(where, v);
    return;
  }
  switch (spec.type) {
    case ParamType::kNumber:
      if (!v.is_number()) fail(where, "expected a number");
      break;
    case ParamType::kInteger:
      if (!v.is_number_integer()) fail(where, "expected an integer");
      break;
    case ParamType::kString:
      if (!v.is_string()) fail(where, "expected a string");
      if (!spec.choices.empty() &&
          std::find(spec.choices.begin(), spec.choices.end(), v.get<std::string>()) ==
              spec.choices.end()) {
        fail(where, "unknown choice '" + v.get<std::string>() + "'");
      }
      break;
    case ParamType::kNumberList:
      if (!v.is_array() || v.empty()) fail(where, "expected a non-empty list of numbers");
      for (const auto& e : v) {
        if (!e.is_number()) fail(where, "expected a non-empty list of numbers");
      }
      break;
    case ParamType::kComplexMatrix:
    case ParamType::kComplexStates: {
      if (!v.is_array() || v.empty()) fail(where, "expected a non-empty list of rows");
      const std::size_t width = v[0].is_array() ? v[0].size() : 0;
      for (const auto& row : v) {
        if (!row.is_array() || row.empty() || row.size() != width) {
          fail(where, "rows must be non-empty lists of equal length");
        }
        for (const auto& e : row) {
          if (!is_complex_entry(e)) fail(where, "entries must be numbers or [re, im] pairs");
        }
      }
      if (spec.type == ParamType::kComplexMatrix && v.size() != width) {
        fail(where, "matrix must be square");
      }
      break;
    }
  }
}

}  // namespace

ExperimentConfig validate_config(const Json& raw, const ExperimentSchema& schema) {
  if (!raw.is_object()) throw SchemaError("config must be an object");
  static const std::set<std::string> top{"experiment", "params", "output", "seed", "workers",
                                         "overrides"};
  for (const auto& [k, _] : raw.items()) {
    if (!top.count(k)) fail("config", "unknown key '" + k + "'");
  }
  ExperimentConfig cfg;
  cfg.raw = raw;
  if (!raw.contains("experiment") || !raw["experiment"].is_string()) {
    fail("config", "missing string 'experiment'");
  }
  cfg.experiment = raw["experiment"].get<std::string>();
  if (cfg.experiment != schema.name) fail("config", "experiment does not match schema");

  if (raw.contains("output")) {
    if (!raw["output"].is_string()) fail("output", "expected a string");
    cfg.output = raw["output"].get<std::string>();
  } else {
    cfg.output = schema.name + ".csv";
  }
  if (raw.contains("seed")) {
    const Json& seed = raw["seed"];
    if (!seed.is_number_unsigned() &&
        !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      fail("seed", "expected a non-negative integer");
    }
    cfg.seed = raw["seed"].get<std::uint64_t>();
  }
  if (raw.contains("workers")) {
    if (!raw["workers"].is_number_integer() || raw["workers"].get<std::int64_t>() < 1 ||
        raw["workers"].get<std::int64_t>() > 256) {
      fail("workers", "expected a positive integer");
    }
    cfg.workers = raw["workers"].get<std::size_t>();
  }

  Json params = raw.value("params", Json::object());
  if (!params.is_object()) fail("params", "expected an object");
  for (const auto& [k, v] : params.items()) {
    const ParamSpec* spec = schema.find(k);
    if (!spec) fail("params." + k, "unknown parameter for " + schema.name);
    check_value("params." + k, *spec, v);
  }
  if (raw.contains("overrides")) {
    const Json& ov = raw["overrides"];
    if (!ov.is_object()) fail("overrides", "expected an object");
    for (const auto& [k, v] : ov.items()) {
      const ParamSpec* spec = schema.find(k);
      if (!spec || !spec->overridable) fail("overrides." + k, "not an overridable parameter");
      check_value("overrides." + k, *spec, v);
      params[k] = v;
    }
  }
  for (const auto& spec : schema.params) {
    if (!params.contains(spec.name)) {
      if (spec.default_value.is_null()) fail("params." + spec.name, "required parameter missing");
      params[spec.name] = spec.default_value;
    }
  }
  cfg.params = std::move(params);
  return cfg;
}

std::vector<Json> expand_sweeps(const ExperimentConfig& cfg, const ExperimentSchema& schema) {
  std::vector<Json> points{cfg.params};
  for (const auto& spec : schema.params) {
    const Json& v = cfg.params.at(spec.name);
    if (!spec.sweepable || !is_sweep(v)) continue;
    const auto values = parse_sweep("params." + spec.name, v).values();
    std::vector<Json> next;
    next.reserve(points.size() * values.size());
    for (const auto& p : points) {
      for (double x : values) {
        Json q = p;
        q[spec.name] = x;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace geophase::tools
