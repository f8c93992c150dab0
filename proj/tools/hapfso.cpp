// hapfso: plan HAP networks with multi-transceiver FSO downlinks.
//
//   hapfso optimize     [--config f] [--out dir] [overrides]
//   hapfso tables       --out dir [--config f] [overrides]
//   hapfso design       --out dir [--config f] [overrides]
//   hapfso scenario-gen --out dir [--config f] [overrides]
//
// Exit codes: 0 ok, 2 usage/config, 3 infeasible, 4 invariant violation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hapfso/error.hpp"
#include "hapfso/report.hpp"
#include "hapfso/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace hapfso;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInvariant = 4;

struct Overrides {
  std::string config;
  std::string out;
  std::optional<double> e_solar_kwh;
  std::optional<int> w;
  std::optional<int> v;
  std::optional<int> v_ceiling;
  std::optional<double> r_rx;
  std::optional<int> n_nodes;
  std::optional<std::uint64_t> seed;
  std::optional<int> demands_per_node;
  std::optional<double> area_side;
  std::optional<double> step_deg;
  std::optional<std::string> convention;
  std::optional<std::string> scenario;
};

void add_common(CLI::App* cmd, Overrides& o, bool out_required) {
  cmd->add_option("--config", o.config, "JSON parameter file");
  auto* out = cmd->add_option("--out", o.out, "output directory");
  if (out_required) out->required();
  cmd->add_option("--e-solar-kwh", o.e_solar_kwh, "daily solar energy, kWh");
  cmd->add_option("--w", o.w, "wavelengths per WDM link");
  cmd->add_option("--v", o.v, "initial inter-HAP link cap V");
  cmd->add_option("--v-ceiling", o.v_ceiling, "largest V tried by design");
  cmd->add_option("--r-rx", o.r_rx, "receiver aperture radius, m");
  cmd->add_option("--n-nodes", o.n_nodes, "ground FSO nodes");
  cmd->add_option("--seed", o.seed, "scenario seed");
  cmd->add_option("--demands-per-node", o.demands_per_node, "generated demands per node");
  cmd->add_option("--area-side", o.area_side, "side of the square area, m");
  cmd->add_option("--step-deg", o.step_deg, "angle grid step, degrees");
  cmd->add_option("--convention", o.convention, "power convention")
      ->check(CLI::IsMember({"tabulated", "geometric"}));
  cmd->add_option("--scenario", o.scenario, "scenario JSON file for design");
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg;
  if (!o.config.empty()) {
    if (!fs::exists(o.config)) {
      throw Error(ErrorCode::kConfig, "parameter file not found: " + o.config);
    }
    cfg = load_run_config(o.config);
  }
  if (o.e_solar_kwh) cfg.inputs.energy.e_solar = *o.e_solar_kwh * 1000.0;
  if (o.w) cfg.inputs.w = *o.w;
  if (o.v) cfg.inputs.v_max = *o.v;
  if (o.v_ceiling) cfg.design.v_ceiling = *o.v_ceiling;
  if (o.r_rx) cfg.inputs.link.r_rx = *o.r_rx;
  if (o.n_nodes) {
    cfg.inputs.n_nodes = *o.n_nodes;
    cfg.scenario.generate.n_nodes = *o.n_nodes;
  }
  if (o.seed) cfg.scenario.generate.seed = *o.seed;
  if (o.demands_per_node) cfg.scenario.generate.demands_per_node = *o.demands_per_node;
  if (o.area_side) {
    cfg.scenario.generate.area_side = *o.area_side;
    cfg.inputs.area = *o.area_side * *o.area_side;
  }
  if (o.step_deg) cfg.design.step_deg = *o.step_deg;
  if (o.convention) {
    cfg.inputs.convention = *o.convention == "geometric" ? PowerConvention::geometric()
                                                         : PowerConvention::tabulated();
  }
  if (o.scenario) {
    cfg.scenario.file = *o.scenario;
    cfg.scenario.inline_scenario.reset();
  }
  cfg.validate();
  return cfg;
}

fs::path prepare_out(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kConfig, "cannot create output directory " + dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig:
    case ErrorCode::kInvalidArgument:
      return kExitConfig;
    case ErrorCode::kInvariantViolation:
      return kExitInvariant;
    default:
      return kExitInfeasible;
  }
}

int cmd_optimize(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const CsvTable t = optimize_report(find_optimal_mfso(cfg.inputs, cfg.design.step_deg));
  std::fputs(t.body().c_str(), stdout);
  if (!o.out.empty()) write_file(prepare_out(o.out) / "optimize.csv", t.str());
  return 0;
}

int cmd_tables(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const fs::path dir = prepare_out(o.out);
  write_file(dir / "max_beam_width.csv", max_beam_width_table(cfg).str());
  write_file(dir / "max_extended_coverage.csv", max_extended_coverage_table(cfg).str());
  write_file(dir / "optimal_configurations.csv", optimal_config_table(cfg).str());
  return 0;
}

std::string run_tag(const DesignRun& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "n%d_s%llu_e%g_w%d", r.n_nodes,
                static_cast<unsigned long long>(r.seed), r.e_solar_kwh, r.w);
  return buf;
}

int cmd_design(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const fs::path dir = prepare_out(o.out);
  const std::vector<DesignRun> runs = run_design_sweep(cfg);
  const fs::path plans = prepare_out((dir / "plans").string());
  for (const DesignRun& r : runs) {
    write_file(plans / ("plan_" + run_tag(r) + ".json"), plan_to_json(r).dump(1) + "\n");
  }
  write_file(dir / "design_series.csv", design_series(runs).str());
  return 0;
}

int cmd_scenario_gen(const Overrides& o) {
  const RunConfig cfg = resolve(o);
  const fs::path dir = prepare_out(o.out);
  const auto nodes = cfg.sweep.n_nodes.value_or(std::vector<int>{cfg.scenario.generate.n_nodes});
  const auto seeds =
      cfg.sweep.seeds.value_or(std::vector<std::uint64_t>{cfg.scenario.generate.seed});
  const bool single = nodes.size() == 1 && seeds.size() == 1;
  for (int n : nodes) {
    for (std::uint64_t seed : seeds) {
      ScenarioOptions opt = cfg.scenario.generate;
      opt.n_nodes = n;
      opt.seed = seed;
      opt.wavelength_capacity = cfg.design.wavelength_capacity;
      const std::string name =
          single ? "scenario.json"
                 : "scenario_n" + std::to_string(n) + "_s" + std::to_string(seed) + ".json";
      save_scenario(generate_scenario(opt), dir / name);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HAP network planner with mFSO serving configurations"};
  app.require_subcommand(1);
  Overrides o;
  add_common(app.add_subcommand("optimize", "optimal mFSO configuration as one CSV row"), o,
             false);
  add_common(app.add_subcommand("tables", "beam-width, extended-coverage and optimum tables"),
             o, true);
  add_common(app.add_subcommand("design", "cluster, place and route; plan JSON + CSV series"),
             o, true);
  add_common(app.add_subcommand("scenario-gen", "write seeded random scenarios"), o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "optimize") return cmd_optimize(o);
    if (cmd == "tables") return cmd_tables(o);
    if (cmd == "design") return cmd_design(o);
    return cmd_scenario_gen(o);
  } catch (const Error& e) {
    std::fprintf(stderr, "hapfso %s: %s: %s\n", cmd.c_str(), to_string(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hapfso %s: internal error: %s\n", cmd.c_str(), e.what());
    return kExitInvariant;
  }
}
