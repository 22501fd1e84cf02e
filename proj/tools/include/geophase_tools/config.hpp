#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace geophase::tools {

using Json = nlohmann::json;

/// Config rejected against the experiment schema (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamType {
  kNumber,
  kInteger,
  kString,
  kNumberList,
  kComplexMatrix,  ///< rows of entries; an entry is a number or [re, im]
  kComplexStates,  ///< list of state vectors, entries as above
};

struct ParamSpec {
  std::string name;
  ParamType type = ParamType::kNumber;
  Json default_value;  ///< null means required
  std::string description;
  bool sweepable = false;    ///< also accepts {"start", "stop", "count"}
  bool overridable = false;  ///< may appear under "overrides"
  std::vector<std::string> choices;  ///< allowed strings, if any
};

struct ExperimentSchema {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  std::vector<std::string> columns;

  const ParamSpec* find(const std::string& key) const;
  Json to_json() const;
};

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;
  /// start + k (stop - start) / (count - 1); a single point is `start`.
  std::vector<double> values() const;
};

struct ExperimentConfig {
  std::string experiment;
  Json params;  ///< every schema key present, defaults filled, overrides applied
  std::string output;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  Json raw;  ///< the config as given, echoed into the output metadata
};

std::string to_string(ParamType t);

/// Validates the top level (experiment, params, output, seed, workers,
/// overrides) and then the params against `schema`. Throws SchemaError.
ExperimentConfig validate_config(const Json& raw, const ExperimentSchema& schema);

/// Expands sweepable params into the row-major cartesian product of scalar
/// param objects (first sweep varies slowest).
std::vector<Json> expand_sweeps(const ExperimentConfig& cfg, const ExperimentSchema& schema);

}  // namespace geophase::tools
