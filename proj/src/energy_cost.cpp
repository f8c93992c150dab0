#include "hapfso/energy_cost.hpp"

#include <cmath>
#include <string>

#include "hapfso/error.hpp"

namespace hapfso {

namespace {

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be finite and >= 0");
  }
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be finite and > 0");
  }
}

void require_count(int value, const char* name) {
  if (value < 0) {
    throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be >= 0");
  }
}

}  // namespace

void EnergyParams::validate() const {
  require_non_negative(rho_avion, "rho_avion");
  require_non_negative(rho_pat, "rho_pat");
  require_non_negative(rho_hcm, "rho_hcm");
  require_non_negative(rho_fso_tx, "rho_fso_tx");
  require_non_negative(rho_inter, "rho_inter");
  require_non_negative(mu_hap, "mu_hap");
  require_non_negative(mu_fso, "mu_fso");
  require_non_negative(e_solar, "e_solar");
}

void CostParams::validate() const {
  require_positive(amort_hap, "amort_hap");
  require_positive(amort_fso, "amort_fso");
  require_positive(maint_onetime, "maint_onetime");
  require_positive(maint_cycle_days, "maint_cycle_days");
}

double daily_energy(const EnergyParams& energy, int n_serving, int n_inter) {
  require_count(n_serving, "n_serving");
  require_count(n_inter, "n_inter");
  const double avionics =
      (energy.mu_hap + (n_serving + n_inter) * energy.mu_fso) * energy.rho_avion;
  const double downlink =
      n_serving * (energy.rho_fso_tx + energy.rho_hcm) + energy.rho_pat;
  const double inter = energy.rho_inter * n_inter;
  return (avionics + downlink + inter) * 24.0;
}

bool solar_feasible(const EnergyParams& energy, int n_serving, int n_inter) {
  return daily_energy(energy, n_serving, n_inter) <= energy.e_solar;
}

CostBreakdown network_cost(const CostParams& cost, int k, int m, int l_inter) {
  require_count(k, "k");
  require_count(m, "m");
  require_count(l_inter, "l_inter");
  CostBreakdown out;
  out.k = k;
  out.m = m;
  out.l_inter = l_inter;
  out.amortization = k * (cost.amort_hap + (m + 1) * cost.amort_fso) +
                     2.0 * l_inter * cost.amort_fso;
  out.maintenance = k * (cost.maint_onetime / cost.maint_cycle_days);
  out.total = out.amortization + out.maintenance;
  return out;
}

CostBreakdown network_cost(const CostParams& cost, std::span<const HapLoad> haps) {
  CostBreakdown out;
  out.k = static_cast<int>(haps.size());
  long transceivers = 0;
  for (const HapLoad& hap : haps) {
    require_count(hap.n_serving, "n_serving");
    require_count(hap.n_inter, "n_inter");
    require_positive(hap.days_in_space, "days_in_space");
    transceivers += hap.n_serving + hap.n_inter;
    out.maintenance += cost.maint_onetime / hap.days_in_space;
  }
  out.amortization =
      out.k * cost.amort_hap + static_cast<double>(transceivers) * cost.amort_fso;
  out.total = out.amortization + out.maintenance;
  return out;
}

int hap_lower_bound(int n_nodes, int w) {
  require_count(n_nodes, "n_nodes");
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");
  return (n_nodes + w - 1) / w;
}

double hap_lower_bound_ratio(int n_nodes, int w) {
  require_count(n_nodes, "n_nodes");
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");
  return static_cast<double>(n_nodes) / w;
}

}  // namespace hapfso
