#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "geophase/error.hpp"
#include "geophase_tools/config.hpp"
#include "geophase_tools/criteria.hpp"
#include "geophase_tools/experiments.hpp"

namespace gt = geophase::tools;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitNumerical = 3;

int report(int code, const gt::Json& record) {
  std::cerr << record.dump() << '\n';
  return code;
}

int run(const std::string& path, std::optional<std::uint64_t> seed,
        std::optional<std::size_t> workers, std::optional<std::string> out) {
  gt::Json raw;
  try {
    std::ifstream in(path);
    if (!in) return report(kExitSchema, {{"error", "schema"}, {"message", "cannot open " + path}});
    raw = gt::Json::parse(in);
  } catch (const gt::Json::parse_error& e) {
    return report(kExitSchema, {{"error", "schema"}, {"message", e.what()}});
  }
  try {
    if (raw.is_object()) {
      if (seed) raw["seed"] = *seed;
      if (workers) raw["workers"] = *workers;
      if (out) raw["output"] = *out;
    }
    const gt::ExperimentConfig cfg = gt::prepare_config(raw);
    const gt::ResultTable table =
        gt::run_experiment(cfg, *gt::find_experiment(cfg.experiment));
    if (cfg.output == "-") {
      gt::write_csv(std::cout, table);
    } else {
      std::ofstream f(cfg.output);
      if (!f) {
        return report(kExitSchema, {{"error", "schema"}, {"message", "cannot write " + cfg.output}});
      }
      gt::write_csv(f, table);
      std::cerr << "wrote " << table.rows().size() << " rows to " << cfg.output << '\n';
    }
    return 0;
  } catch (const gt::SchemaError& e) {
    return report(kExitSchema, {{"error", "schema"}, {"message", e.what()}});
  } catch (const geophase::Error& e) {
    return report(kExitNumerical, {{"error", "numerical"},
                                   {"kind", std::string(geophase::to_string(e.kind()))},
                                   {"message", e.what()}});
  } catch (const gt::Json::exception& e) {
    return report(kExitSchema, {{"error", "schema"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    return report(kExitNumerical, {{"error", "numerical"}, {"kind", "internal"}, {"message", e.what()}});
  }
}

int list(bool json) {
  if (json) {
    gt::Json all = gt::Json::array();
    for (const auto& e : gt::registry()) {
      gt::Json j = e.schema.to_json();
      j["example"] = e.example;
      all.push_back(std::move(j));
    }
    std::cout << all.dump(2) << '\n';
    return 0;
  }
  for (const auto& e : gt::registry()) {
    std::cout << e.schema.name << "\n  " << e.schema.description << '\n';
    for (const auto& p : e.schema.params) {
      std::cout << "    " << p.name << " (" << gt::to_string(p.type)
                << (p.sweepable ? ", sweepable" : "") << ")"
                << (p.default_value.is_null() ? " required" : " = " + p.default_value.dump())
                << '\n';
    }
  }
  return 0;
}

int selftest() {
  bool ok = true;
  for (int id : gt::kSelftestCriteria) {
    const auto r = gt::run_criterion(id);
    std::cout << gt::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric phases, holonomies and geometric gates"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::string> out;
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--workers", workers, "override the worker count")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "override the output path ('-' for stdout)");

  std::string config;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config");
  run_cmd->fallthrough();
  run_cmd->add_option("config", config, "JSON config path")->required();
  bool as_json = false;
  auto* list_cmd = app.add_subcommand("list", "list experiments and their parameters");
  list_cmd->add_flag("--json", as_json, "machine-readable schemas");
  auto* self_cmd = app.add_subcommand("selftest", "run acceptance criteria 1-3 and 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSchema;
  }
  if (*run_cmd) return run(config, seed, workers, out);
  if (*list_cmd) return list(as_json);
  if (*self_cmd) return selftest();
  return kExitSchema;
}
