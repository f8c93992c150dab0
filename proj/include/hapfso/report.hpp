#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hapfso/run_config.hpp"

namespace hapfso {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;   // '\n' line endings, no quoting (cells never contain ',')
  std::string body() const;  // rows only
};

std::string format_fixed(double value, int decimals);
std::string format_degrees(Angle angle);
/// Whole metres, rounded down, as the published tables print radii.
std::string format_metres(double metres);

/// alpha_deg,m,beta_deg,r_ext_m,k_hat,est_cost ("-" for beta when m = 0).
CsvTable optimize_report(const OptimalConfig& best);

/// r_rx_m,alpha_max_deg,r_alpha_m over sweep.r_rx_m.
CsvTable max_beam_width_table(const RunConfig& config);

/// e_solar_kwh,max_m,r_rx_m,alpha_deg,beta_deg,r_ext_m: the largest
/// configuration (alpha_max, m_upper_bound, beta_max) per sweep point.
CsvTable max_extended_coverage_table(const RunConfig& config);

/// Optimizer result per (n_nodes, e_solar_kwh, w) sweep point.
CsvTable optimal_config_table(const RunConfig& config);

struct DesignRun {
  int n_nodes = 0;
  std::uint64_t seed = 0;
  double e_solar_kwh = 0.0;
  int w = 0;
  Scenario scenario;
  NetworkPlan plan;
};

/// Runs design_network over every (scenario, e_solar_kwh, w) sweep point.
/// Scenarios come from the config's file or inline scenario, or are
/// generated per (n_nodes, seed). Plans are validated; a violation raises
/// Error(kInvariantViolation).
std::vector<DesignRun> run_design_sweep(const RunConfig& config);

/// n_nodes,seed,e_solar_kwh,w,v_used,alpha_deg,m,beta_deg,r_ext_m,k,k_hat,
/// lb,lb_ratio,l_inter,avg_degree,amortization,maintenance,cost
CsvTable design_series(const std::vector<DesignRun>& runs);

nlohmann::json plan_to_json(const DesignRun& run);

}  // namespace hapfso
