#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geophase_tools/config.hpp"
#include "geophase_tools/table.hpp"

namespace geophase::tools {

inline constexpr const char* kToolName = "geophase";
inline constexpr const char* kToolVersion = "0.1.0";

struct PointContext {
  std::uint64_t seed = 0;   ///< stream seed of this sweep point
  std::size_t index = 0;    ///< position in the sweep
};

struct Experiment {
  ExperimentSchema schema;
  Json example;  ///< complete config that runs quickly
  std::function<std::vector<Row>(const Json& point, const PointContext& ctx)> run_point;
};

/// The registered experiments, in listing order.
const std::vector<Experiment>& registry();
const Experiment* find_experiment(const std::string& name);

/// Seed of sweep point `index`, independent of worker scheduling.
std::uint64_t point_seed(std::uint64_t seed, std::size_t index);

/// Runs every sweep point on up to cfg.workers threads; rows keep sweep
/// order. Module errors propagate as geophase::Error.
ResultTable run_experiment(const ExperimentConfig& cfg, const Experiment& experiment);

/// Looks up the experiment named in `raw`, validates and runs it.
/// Unknown experiment names raise SchemaError.
ResultTable run_config(const Json& raw);

/// Same as run_config with a pre-validated config (after flag overrides).
ExperimentConfig prepare_config(const Json& raw);

}  // namespace geophase::tools
