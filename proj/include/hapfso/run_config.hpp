#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hapfso/config_optimizer.hpp"
#include "hapfso/network_design.hpp"

namespace hapfso {

/// Where `design` gets its ground nodes: a scenario file, an inline
/// scenario, or generation parameters.
struct ScenarioSource {
  std::optional<std::filesystem::path> file;
  std::optional<Scenario> inline_scenario;
  ScenarioOptions generate;
};

/// Sweep axes. An absent axis falls back to the base value; an explicitly
/// empty axis yields no rows.
struct SweepAxes {
  std::optional<std::vector<double>> e_solar_kwh;
  std::optional<std::vector<int>> w;
  std::optional<std::vector<double>> r_rx_m;
  std::optional<std::vector<int>> n_nodes;
  std::optional<std::vector<std::uint64_t>> seeds;
};

struct RunConfig {
  OptimizerInputs inputs;  // energy.e_solar in Wh
  DesignOptions design;
  ScenarioSource scenario;
  SweepAxes sweep;

  void validate() const;  // Error(kConfig) on any module invariant
};

/// Parses the JSON schema documented in the README. Unknown keys, wrong
/// types and invalid values raise Error(kConfig).
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::json run_config_to_json(const RunConfig& config);

}  // namespace hapfso
