#include "hapfso/run_config.hpp"

#include <fstream>

#include "hapfso/error.hpp"
#include "hapfso/scenario_io.hpp"

namespace hapfso {

using nlohmann::json;

namespace {

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, where + "." + key + ": " + e.what());
  }
}

template <typename T>
void read_axis(const json& j, const char* key, std::optional<std::vector<T>>& out) {
  if (!j.contains(key)) return;
  std::vector<T> values;
  read(j, key, values, "sweep");
  out = std::move(values);
}

void read_link(const json& j, LinkBudgetParams& link) {
  reject_unknown_keys(j, {"sigma_per_m", "p_tx_w", "r_rx_m", "rho_rx_w", "h_m"}, "link");
  read(j, "sigma_per_m", link.sigma, "link");
  read(j, "p_tx_w", link.p_tx, "link");
  read(j, "r_rx_m", link.r_rx, "link");
  read(j, "rho_rx_w", link.rho_rx, "link");
  read(j, "h_m", link.h, "link");
}

void read_energy(const json& j, EnergyParams& e) {
  reject_unknown_keys(j,
                      {"rho_avion_w_per_kg", "rho_pat_w", "rho_hcm_w", "rho_fso_tx_w",
                       "rho_inter_w", "mu_hap_kg", "mu_fso_kg", "e_solar_kwh"},
                      "energy");
  read(j, "rho_avion_w_per_kg", e.rho_avion, "energy");
  read(j, "rho_pat_w", e.rho_pat, "energy");
  read(j, "rho_hcm_w", e.rho_hcm, "energy");
  read(j, "rho_fso_tx_w", e.rho_fso_tx, "energy");
  read(j, "rho_inter_w", e.rho_inter, "energy");
  read(j, "mu_hap_kg", e.mu_hap, "energy");
  read(j, "mu_fso_kg", e.mu_fso, "energy");
  double kwh = e.e_solar / 1000.0;
  read(j, "e_solar_kwh", kwh, "energy");
  e.e_solar = kwh * 1000.0;
}

void read_cost(const json& j, CostParams& c) {
  reject_unknown_keys(j, {"amort_hap", "amort_fso", "maint_onetime", "maint_cycle_days"},
                      "cost");
  read(j, "amort_hap", c.amort_hap, "cost");
  read(j, "amort_fso", c.amort_fso, "cost");
  read(j, "maint_onetime", c.maint_onetime, "cost");
  read(j, "maint_cycle_days", c.maint_cycle_days, "cost");
}

void read_scenario(const json& j, RunConfig& cfg) {
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "scenario: expected an object");
  if (j.contains("nodes")) {
    cfg.scenario.inline_scenario = scenario_from_json(j);
    return;
  }
  reject_unknown_keys(j, {"file", "n_nodes", "seed", "demands_per_node"}, "scenario");
  if (j.contains("file")) {
    std::string path;
    read(j, "file", path, "scenario");
    cfg.scenario.file = path;
  }
  read(j, "n_nodes", cfg.scenario.generate.n_nodes, "scenario");
  read(j, "seed", cfg.scenario.generate.seed, "scenario");
  read(j, "demands_per_node", cfg.scenario.generate.demands_per_node, "scenario");
}

void config_error(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::kConfig, msg);
}

}  // namespace

void RunConfig::validate() const {
  try {
    inputs.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  config_error(inputs.v_max >= 0, "v_init must be >= 0");
  config_error(design.v_ceiling >= inputs.v_max, "v_ceiling must be >= v_init");
  config_error(design.step_deg > 0.0 && design.step_deg < 180.0,
               "step_deg must lie in (0, 180)");
  config_error(design.l_hh > 0.0, "l_hh_m must be > 0");
  config_error(design.wavelength_capacity > 0.0, "wavelength_capacity_gbps must be > 0");
  config_error(scenario.generate.n_nodes >= 2, "scenario.n_nodes must be >= 2");
  config_error(scenario.generate.area_side > 0.0, "area_side_m must be > 0");
  config_error(scenario.generate.demands_per_node >= 0,
               "scenario.demands_per_node must be >= 0");
  if (sweep.e_solar_kwh) {
    for (double e : *sweep.e_solar_kwh) config_error(e >= 0.0, "sweep.e_solar_kwh must be >= 0");
  }
  if (sweep.w) {
    for (int w : *sweep.w) config_error(w >= 1, "sweep.w must be >= 1");
  }
  if (sweep.r_rx_m) {
    for (double r : *sweep.r_rx_m) config_error(r > 0.0, "sweep.r_rx_m must be > 0");
  }
  if (sweep.n_nodes) {
    for (int n : *sweep.n_nodes) config_error(n >= 2, "sweep.n_nodes must be >= 2");
  }
}

RunConfig run_config_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"link", "power_convention", "energy", "cost", "w", "v_init",
                       "v_ceiling", "step_deg", "l_hh_m", "wavelength_capacity_gbps",
                       "area_side_m", "n_nodes", "scenario", "sweep"},
                      "config");
  RunConfig cfg;
  if (j.contains("link")) read_link(j.at("link"), cfg.inputs.link);
  if (j.contains("power_convention")) {
    std::string name;
    read(j, "power_convention", name, "config");
    if (name == "tabulated") {
      cfg.inputs.convention = PowerConvention::tabulated();
    } else if (name == "geometric") {
      cfg.inputs.convention = PowerConvention::geometric();
    } else {
      throw Error(ErrorCode::kConfig,
                  "power_convention must be \"tabulated\" or \"geometric\"");
    }
  }
  if (j.contains("energy")) read_energy(j.at("energy"), cfg.inputs.energy);
  if (j.contains("cost")) read_cost(j.at("cost"), cfg.inputs.cost);
  read(j, "w", cfg.inputs.w, "config");
  read(j, "v_init", cfg.inputs.v_max, "config");
  read(j, "v_ceiling", cfg.design.v_ceiling, "config");
  read(j, "step_deg", cfg.design.step_deg, "config");
  read(j, "l_hh_m", cfg.design.l_hh, "config");
  read(j, "wavelength_capacity_gbps", cfg.design.wavelength_capacity, "config");
  cfg.scenario.generate.wavelength_capacity = cfg.design.wavelength_capacity;
  read(j, "area_side_m", cfg.scenario.generate.area_side, "config");
  read(j, "n_nodes", cfg.inputs.n_nodes, "config");
  cfg.scenario.generate.n_nodes = cfg.inputs.n_nodes;
  cfg.inputs.area = cfg.scenario.generate.area_side * cfg.scenario.generate.area_side;
  if (j.contains("scenario")) read_scenario(j.at("scenario"), cfg);
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    reject_unknown_keys(s, {"e_solar_kwh", "w", "r_rx_m", "n_nodes", "seeds"}, "sweep");
    read_axis(s, "e_solar_kwh", cfg.sweep.e_solar_kwh);
    read_axis(s, "w", cfg.sweep.w);
    read_axis(s, "r_rx_m", cfg.sweep.r_rx_m);
    read_axis(s, "n_nodes", cfg.sweep.n_nodes);
    read_axis(s, "seeds", cfg.sweep.seeds);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, "config file " + path.string() + ": " + e.what());
  }
  return run_config_from_json(j);
}

json run_config_to_json(const RunConfig& cfg) {
  const OptimizerInputs& in = cfg.inputs;
  json j{
      {"link",
       {{"sigma_per_m", in.link.sigma},
        {"p_tx_w", in.link.p_tx},
        {"r_rx_m", in.link.r_rx},
        {"rho_rx_w", in.link.rho_rx},
        {"h_m", in.link.h}}},
      {"power_convention",
       in.convention == PowerConvention::geometric() ? "geometric" : "tabulated"},
      {"energy",
       {{"rho_avion_w_per_kg", in.energy.rho_avion},
        {"rho_pat_w", in.energy.rho_pat},
        {"rho_hcm_w", in.energy.rho_hcm},
        {"rho_fso_tx_w", in.energy.rho_fso_tx},
        {"rho_inter_w", in.energy.rho_inter},
        {"mu_hap_kg", in.energy.mu_hap},
        {"mu_fso_kg", in.energy.mu_fso},
        {"e_solar_kwh", in.energy.e_solar / 1000.0}}},
      {"cost",
       {{"amort_hap", in.cost.amort_hap},
        {"amort_fso", in.cost.amort_fso},
        {"maint_onetime", in.cost.maint_onetime},
        {"maint_cycle_days", in.cost.maint_cycle_days}}},
      {"w", in.w},
      {"v_init", in.v_max},
      {"v_ceiling", cfg.design.v_ceiling},
      {"step_deg", cfg.design.step_deg},
      {"l_hh_m", cfg.design.l_hh},
      {"wavelength_capacity_gbps", cfg.design.wavelength_capacity},
      {"area_side_m", cfg.scenario.generate.area_side},
      {"n_nodes", in.n_nodes},
  };
  json scenario{{"n_nodes", cfg.scenario.generate.n_nodes},
                {"seed", cfg.scenario.generate.seed},
                {"demands_per_node", cfg.scenario.generate.demands_per_node}};
  if (cfg.scenario.file) scenario["file"] = cfg.scenario.file->string();
  j["scenario"] = cfg.scenario.inline_scenario ? scenario_to_json(*cfg.scenario.inline_scenario)
                                               : scenario;
  json sweep = json::object();
  if (cfg.sweep.e_solar_kwh) sweep["e_solar_kwh"] = *cfg.sweep.e_solar_kwh;
  if (cfg.sweep.w) sweep["w"] = *cfg.sweep.w;
  if (cfg.sweep.r_rx_m) sweep["r_rx_m"] = *cfg.sweep.r_rx_m;
  if (cfg.sweep.n_nodes) sweep["n_nodes"] = *cfg.sweep.n_nodes;
  if (cfg.sweep.seeds) sweep["seeds"] = *cfg.sweep.seeds;
  j["sweep"] = sweep;
  return j;
}

}  // namespace hapfso
