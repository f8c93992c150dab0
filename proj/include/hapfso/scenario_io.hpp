#pragma once

#include <filesystem>

#include <json.hpp>

#include "hapfso/network_design.hpp"

namespace hapfso {

/// {"nodes": [{"id", "x", "y"}], "demands": [{"src", "dst", "bandwidth"}],
///  "area_side": m, "seed": n}
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Rejects missing or unknown keys with Error(kConfig).
Scenario scenario_from_json(const nlohmann::json& j);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Throws Error(kConfig) naming the first key of `j` not in `allowed`.
void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const std::string& where);

}  // namespace hapfso
