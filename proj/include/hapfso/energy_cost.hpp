#pragma once

#include <span>

namespace hapfso {

/// Power and mass figures of a HAP and its FSO payload.
struct EnergyParams {
  double rho_avion = 2.0;    // avionics power per carried mass, W/kg
  double rho_pat = 15.0;     // pointing/acquisition/tracking, W (one per HAP)
  double rho_hcm = 20.0;     // heating/cooling/management per serving FSO, W
  double rho_fso_tx = 1.0;   // serving laser source, W
  double rho_inter = 35.1;   // per inter-HAP transceiver, all-in, W
  double mu_hap = 500.0;     // platform mass, kg
  double mu_fso = 6.3;       // per-transceiver mass, kg
  double e_solar = 50000.0;  // daily harvested solar energy, Wh/day

  void validate() const;
};

/// Daily cost constants. Currency is unitless.
struct CostParams {
  double amort_hap = 100.0;         // per HAP per day
  double amort_fso = 10.0;          // per FSO transceiver per day
  double maint_onetime = 1000.0;    // one lowering/maintenance/relaunch
  double maint_cycle_days = 365.0;  // days between maintenance cycles

  void validate() const;
};

struct CostBreakdown {
  double amortization = 0.0;
  double maintenance = 0.0;
  double total = 0.0;
  int k = 0;
  int l_inter = 0;
  int m = 0;

  bool operator==(const CostBreakdown&) const = default;
};

/// Per-HAP payload and in-space duration for the general cost form.
struct HapLoad {
  int n_serving = 0;
  int n_inter = 0;
  double days_in_space = 0.0;
};

/// 24 h energy draw (Wh) of a HAP carrying `n_serving` serving and
/// `n_inter` inter-HAP transceivers.
double daily_energy(const EnergyParams& energy, int n_serving, int n_inter);

/// True when the daily draw does not exceed the harvested solar energy.
bool solar_feasible(const EnergyParams& energy, int n_serving, int n_inter);

/// Daily network cost for K identical HAPs with m supplementary transceivers
/// and l_inter inter-HAP links (two transceivers each), maintenance every
/// `maint_cycle_days`.
CostBreakdown network_cost(const CostParams& cost, int k, int m, int l_inter);

/// Daily cost summed HAP by HAP.
CostBreakdown network_cost(const CostParams& cost, std::span<const HapLoad> haps);

/// ceil(n_nodes / w): each HAP serves at most w ground nodes.
int hap_lower_bound(int n_nodes, int w);

/// The unrounded ratio n_nodes / w.
double hap_lower_bound_ratio(int n_nodes, int w);

}  // namespace hapfso
