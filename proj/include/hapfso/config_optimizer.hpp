#pragma once

#include "hapfso/angle.hpp"
#include "hapfso/coverage_geometry.hpp"
#include "hapfso/energy_cost.hpp"
#include "hapfso/link_budget.hpp"

namespace hapfso {

struct OptimizerInputs {
  LinkBudgetParams link;
  PowerConvention convention = PowerConvention::tabulated();
  EnergyParams energy;
  CostParams cost;
  int v_max = 10;           // inter-HAP links per HAP
  int w = 40;               // wavelengths per WDM link
  int n_nodes = 480;        // ground FSO nodes
  double area = 1.0e10;     // served ground surface, m^2

  void validate() const;
};

struct OptimalConfig {
  MfsoConfig cfg;
  double r_ext = 0.0;  // covered radius, max(R_alpha, R_ext)
  int k_hat = 0;
  double estimated_cost = 0.0;
};

/// Evaluation of one (alpha, m) grid candidate.
struct Candidate {
  MfsoConfig cfg;
  double r_ext = 0.0;
  int k_hat = 0;
  double estimated_cost = 0.0;
};

/// Grid angles are k * step_deg degrees, k = 1, 2, ...
Angle grid_angle(int k, double step_deg);

/// Largest grid alpha whose principal border power meets rho_rx.
/// Throws kNoFeasibleAlpha when the first grid angle already fails.
Angle alpha_max(const LinkBudgetParams& link, double step_deg = 1.0,
                PowerConvention convention = PowerConvention::tabulated());

/// Largest grid beta for which the joint point J still receives rho_rx.
/// Grid angles where the ring geometry is infeasible (beam too narrow to
/// reach both joint points) are skipped; a horizon overflow counts as a
/// violation. Throws kNoFeasibleBeta when no grid beta qualifies.
Angle beta_max(const LinkBudgetParams& link, Angle alpha, int m,
               double step_deg = 1.0,
               PowerConvention convention = PowerConvention::tabulated());

/// Largest m whose payload (m + 1 serving, v_max inter-HAP transceivers) is
/// sustainable on solar energy alone; 0 when even that fails.
int m_upper_bound(const EnergyParams& energy, int v_max);

/// ceil(max(n_nodes / w, area / (2 r_ext^2))).
int estimate_hap_count(double r_ext, const OptimizerInputs& inputs);

/// K_hat (amort_hap + (m + V + 1) amort_fso + maint_onetime / cycle).
double estimate_cost(int k_hat, int m, const OptimizerInputs& inputs);

/// Cost-estimate of one configuration over its covered radius
/// max(R_alpha, R_ext); m == 0 ignores beta.
Candidate evaluate_candidate(const OptimizerInputs& inputs, const MfsoConfig& cfg);

/// Exhaustive (alpha, m) search, beta = beta_max for each pair. Minimises the
/// estimated cost; ties go to smaller m, then larger alpha.
OptimalConfig find_optimal_mfso(const OptimizerInputs& inputs,
                                double step_deg = 1.0);

}  // namespace hapfso
