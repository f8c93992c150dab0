#include "hapfso/scenario_io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <string>

#include "hapfso/error.hpp"

namespace hapfso {

using nlohmann::json;

namespace {

template <typename T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw Error(ErrorCode::kConfig, where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, where + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::kConfig, where + ": expected an object");
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) {
      return item.key() == k;
    });
    if (!known) throw Error(ErrorCode::kConfig, where + ": unknown key \"" + item.key() + "\"");
  }
}

json scenario_to_json(const Scenario& scenario) {
  json nodes = json::array();
  for (const GroundNode& n : scenario.nodes) nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}});
  json demands = json::array();
  for (const Demand& d : scenario.demands) {
    demands.push_back({{"src", d.src}, {"dst", d.dst}, {"bandwidth", d.bandwidth}});
  }
  return json{{"nodes", nodes},
              {"demands", demands},
              {"area_side", scenario.area_side},
              {"seed", scenario.seed}};
}

Scenario scenario_from_json(const json& j) {
  reject_unknown_keys(j, {"nodes", "demands", "area_side", "seed"}, "scenario");
  Scenario s;
  s.area_side = required<double>(j, "area_side", "scenario");
  s.seed = required<std::uint64_t>(j, "seed", "scenario");
  const json nodes = required<json>(j, "nodes", "scenario");
  const json demands = required<json>(j, "demands", "scenario");
  if (!nodes.is_array() || !demands.is_array()) {
    throw Error(ErrorCode::kConfig, "scenario: nodes and demands must be arrays");
  }
  for (const json& n : nodes) {
    reject_unknown_keys(n, {"id", "x", "y"}, "scenario node");
    s.nodes.push_back(GroundNode{required<int>(n, "id", "scenario node"),
                                 required<double>(n, "x", "scenario node"),
                                 required<double>(n, "y", "scenario node")});
  }
  for (const json& d : demands) {
    reject_unknown_keys(d, {"src", "dst", "bandwidth"}, "scenario demand");
    s.demands.push_back(Demand{required<int>(d, "src", "scenario demand"),
                               required<int>(d, "dst", "scenario demand"),
                               required<double>(d, "bandwidth", "scenario demand")});
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot open scenario file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, "scenario file " + path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
  out << scenario_to_json(scenario).dump(1) << '\n';
}

}  // namespace hapfso
