#include "hapfso/report.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "hapfso/error.hpp"
#include "hapfso/parallel.hpp"
#include "hapfso/scenario_io.hpp"

namespace hapfso {

using nlohmann::json;

namespace {

template <typename T>
std::vector<T> axis_or(const std::optional<std::vector<T>>& axis, T base) {
  return axis ? *axis : std::vector<T>{base};
}

// Re-raises module errors with the sweep point prepended.
template <typename Fn>
auto at_point(const std::string& point, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), "[" + point + "] " + e.what());
  }
}

std::string format_general(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_beta(const MfsoConfig& cfg) {
  return cfg.m > 0 && cfg.beta ? format_degrees(*cfg.beta) : "-";
}

}  // namespace

namespace {

void append_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string CsvTable::body() const {
  std::string out;
  for (const auto& r : rows) append_line(out, r);
  return out;
}

std::string CsvTable::str() const {
  std::string out;
  append_line(out, header);
  return out + body();
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_degrees(Angle angle) {
  // Grid angles are k * step; strip the radian round-trip noise.
  return format_general(std::round(angle.deg() * 1e9) / 1e9);
}

std::string format_metres(double metres) { return format_fixed(std::floor(metres), 0); }

CsvTable optimize_report(const OptimalConfig& best) {
  CsvTable t;
  t.header = {"alpha_deg", "m", "beta_deg", "r_ext_m", "k_hat", "est_cost"};
  t.rows.push_back({format_degrees(best.cfg.alpha), std::to_string(best.cfg.m),
                    format_beta(best.cfg), format_metres(best.r_ext),
                    std::to_string(best.k_hat), format_fixed(best.estimated_cost, 2)});
  return t;
}

CsvTable max_beam_width_table(const RunConfig& config) {
  CsvTable t;
  t.header = {"r_rx_m", "alpha_max_deg", "r_alpha_m"};
  const auto radii = axis_or(config.sweep.r_rx_m, config.inputs.link.r_rx);
  t.rows = parallel_map(radii.size(), [&](std::size_t i) {
    return at_point("r_rx_m=" + format_general(radii[i]), [&] {
      LinkBudgetParams link = config.inputs.link;
      link.r_rx = radii[i];
      const Angle a = alpha_max(link, config.design.step_deg, config.inputs.convention);
      return std::vector<std::string>{format_general(radii[i]), format_degrees(a),
                                      format_metres(principal_radius(link, a))};
    });
  });
  return t;
}

CsvTable max_extended_coverage_table(const RunConfig& config) {
  CsvTable t;
  t.header = {"e_solar_kwh", "max_m", "r_rx_m", "alpha_deg", "beta_deg", "r_ext_m"};
  const auto energies = axis_or(config.sweep.e_solar_kwh, config.inputs.energy.e_solar / 1000.0);
  const auto radii = axis_or(config.sweep.r_rx_m, config.inputs.link.r_rx);
  const std::size_t n = energies.size() * radii.size();
  t.rows = parallel_map(n, [&](std::size_t i) {
    const double e = energies[i / radii.size()];
    const double r = radii[i % radii.size()];
    return at_point("e_solar_kwh=" + format_general(e) + " r_rx_m=" + format_general(r), [&] {
      EnergyParams energy = config.inputs.energy;
      energy.e_solar = e * 1000.0;
      LinkBudgetParams link = config.inputs.link;
      link.r_rx = r;
      const double step = config.design.step_deg;
      MfsoConfig cfg{alpha_max(link, step, config.inputs.convention),
                     m_upper_bound(energy, config.inputs.v_max), std::nullopt};
      if (cfg.m > 0) cfg.beta = beta_max(link, cfg.alpha, cfg.m, step, config.inputs.convention);
      return std::vector<std::string>{format_general(e), std::to_string(cfg.m),
                                      format_general(r), format_degrees(cfg.alpha),
                                      format_beta(cfg), format_metres(coverage_radius(link, cfg))};
    });
  });
  return t;
}

CsvTable optimal_config_table(const RunConfig& config) {
  CsvTable t;
  t.header = {"n_nodes", "e_solar_kwh", "w", "v", "alpha_deg", "m",
              "beta_deg", "r_ext_m", "k_hat", "est_cost"};
  const auto nodes = axis_or(config.sweep.n_nodes, config.inputs.n_nodes);
  const auto energies = axis_or(config.sweep.e_solar_kwh, config.inputs.energy.e_solar / 1000.0);
  const auto widths = axis_or(config.sweep.w, config.inputs.w);
  const std::size_t n = nodes.size() * energies.size() * widths.size();
  t.rows = parallel_map(n, [&](std::size_t i) {
    const int nn = nodes[i / (energies.size() * widths.size())];
    const double e = energies[(i / widths.size()) % energies.size()];
    const int w = widths[i % widths.size()];
    return at_point("n_nodes=" + std::to_string(nn) + " e_solar_kwh=" + format_general(e) +
                        " w=" + std::to_string(w),
                    [&] {
                      OptimizerInputs in = config.inputs;
                      in.n_nodes = nn;
                      in.energy.e_solar = e * 1000.0;
                      in.w = w;
                      const OptimalConfig best = find_optimal_mfso(in, config.design.step_deg);
                      std::vector<std::string> row{std::to_string(nn), format_general(e),
                                                   std::to_string(w), std::to_string(in.v_max)};
                      const auto tail = optimize_report(best).rows.front();
                      row.insert(row.end(), tail.begin(), tail.end());
                      return row;
                    });
  });
  return t;
}

std::vector<DesignRun> run_design_sweep(const RunConfig& config) {
  struct Source {
    int n_nodes;
    std::uint64_t seed;
    std::function<Scenario()> make;
  };
  std::vector<Source> sources;
  const ScenarioSource& src = config.scenario;
  if (src.file || src.inline_scenario) {
    Scenario s = src.file ? load_scenario(*src.file) : *src.inline_scenario;
    const int n = static_cast<int>(s.nodes.size());
    const std::uint64_t seed = s.seed;
    sources.push_back({n, seed, [s] { return s; }});
  } else {
    for (int n : axis_or(config.sweep.n_nodes, src.generate.n_nodes)) {
      for (std::uint64_t seed : axis_or(config.sweep.seeds, src.generate.seed)) {
        ScenarioOptions opt = src.generate;
        opt.n_nodes = n;
        opt.seed = seed;
        opt.wavelength_capacity = config.design.wavelength_capacity;
        sources.push_back({n, seed, [opt] { return generate_scenario(opt); }});
      }
    }
  }
  const auto energies = axis_or(config.sweep.e_solar_kwh, config.inputs.energy.e_solar / 1000.0);
  const auto widths = axis_or(config.sweep.w, config.inputs.w);
  const std::size_t per_source = energies.size() * widths.size();

  return parallel_map(sources.size() * per_source, [&](std::size_t i) {
    const Source& s = sources[i / per_source];
    const double e = energies[(i / widths.size()) % energies.size()];
    const int w = widths[i % widths.size()];
    const std::string point = "n_nodes=" + std::to_string(s.n_nodes) +
                              " seed=" + std::to_string(s.seed) +
                              " e_solar_kwh=" + format_general(e) + " w=" + std::to_string(w);
    return at_point(point, [&] {
      DesignRun run;
      run.n_nodes = s.n_nodes;
      run.seed = s.seed;
      run.e_solar_kwh = e;
      run.w = w;
      run.scenario = s.make();
      OptimizerInputs in = config.inputs;
      in.energy.e_solar = e * 1000.0;
      in.w = w;
      run.plan = design_network(in, run.scenario, config.design);
      in.n_nodes = static_cast<int>(run.scenario.nodes.size());
      in.area = run.scenario.area_side * run.scenario.area_side;
      const auto issues = validate_plan(run.plan, run.scenario, in, config.design);
      if (!issues.empty()) {
        std::string msg = "plan violates " + std::to_string(issues.size()) + " invariant(s):";
        for (const std::string& issue : issues) msg += "\n  " + issue;
        throw Error(ErrorCode::kInvariantViolation, msg);
      }
      return run;
    });
  });
}

CsvTable design_series(const std::vector<DesignRun>& runs) {
  CsvTable t;
  t.header = {"n_nodes", "seed",   "e_solar_kwh", "w",       "v_used",     "alpha_deg",
              "m",       "beta_deg", "r_ext_m",   "k",       "k_hat",      "lb",
              "lb_ratio", "l_inter", "avg_degree", "amortization", "maintenance", "cost"};
  for (const DesignRun& r : runs) {
    const NetworkPlan& p = r.plan;
    const int k = static_cast<int>(p.clusters.size());
    const int l = static_cast<int>(p.topology.links.size());
    t.rows.push_back({std::to_string(r.n_nodes),
                      std::to_string(r.seed),
                      format_general(r.e_solar_kwh),
                      std::to_string(r.w),
                      std::to_string(p.v_used),
                      format_degrees(p.config.cfg.alpha),
                      std::to_string(p.config.cfg.m),
                      format_beta(p.config.cfg),
                      format_metres(p.config.r_ext),
                      std::to_string(k),
                      std::to_string(p.config.k_hat),
                      std::to_string(hap_lower_bound(r.n_nodes, r.w)),
                      format_fixed(hap_lower_bound_ratio(r.n_nodes, r.w), 4),
                      std::to_string(l),
                      format_fixed(k > 0 ? 2.0 * l / k : 0.0, 4),
                      format_fixed(p.cost.amortization, 4),
                      format_fixed(p.cost.maintenance, 4),
                      format_fixed(p.cost.total, 4)});
  }
  return t;
}

json plan_to_json(const DesignRun& run) {
  const NetworkPlan& p = run.plan;
  json config{{"alpha_deg", p.config.cfg.alpha.deg()},
              {"m", p.config.cfg.m},
              {"beta_deg", p.config.cfg.beta ? json(p.config.cfg.beta->deg()) : json(nullptr)},
              {"r_ext_m", p.config.r_ext},
              {"k_hat", p.config.k_hat},
              {"estimated_cost", p.config.estimated_cost}};
  json clusters = json::array();
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    const Cluster& c = p.clusters[i];
    clusters.push_back({{"id", i},
                        {"x", c.center.x},
                        {"y", c.center.y},
                        {"radius_m", c.radius},
                        {"members", c.member_ids}});
  }
  json haps = json::array();
  for (const Hap& h : p.topology.haps) {
    haps.push_back({{"id", h.id}, {"x", h.x}, {"y", h.y}, {"elevation_m", h.elevation}});
  }
  json links = json::array();
  for (const HapLink& l : p.topology.links) {
    links.push_back({{"a", l.a},
                     {"b", l.b},
                     {"length_m", l.length},
                     {"load_ab", l.load_ab},
                     {"load_ba", l.load_ba},
                     {"wavelengths_used", l.wavelengths_used()}});
  }
  json routes = json::array();
  for (const RoutedLightpath& lp : p.topology.lightpaths) {
    routes.push_back(
        {{"src", lp.src_hap}, {"dst", lp.dst_hap}, {"count", lp.count}, {"route", lp.route}});
  }
  return json{{"scenario",
               {{"n_nodes", run.scenario.nodes.size()},
                {"seed", run.seed},
                {"area_side", run.scenario.area_side}}},
              {"e_solar_kwh", run.e_solar_kwh},
              {"w", run.w},
              {"v_used", p.v_used},
              {"config", config},
              {"cost",
               {{"amortization", p.cost.amortization},
                {"maintenance", p.cost.maintenance},
                {"total", p.cost.total},
                {"k", p.cost.k},
                {"m", p.cost.m},
                {"l_inter", p.cost.l_inter}}},
              {"clusters", clusters},
              {"haps", haps},
              {"links", links},
              {"lightpaths", routes}};
}

}  // namespace hapfso
