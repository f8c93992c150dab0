#include "hapfso/config_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "hapfso/error.hpp"

namespace hapfso {

namespace {

void require_step(double step_deg) {
  if (!(step_deg > 0.0) || !(step_deg < 180.0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid step must lie in (0, 180) degrees");
  }
}

// Total order used for the argmin: cost, then fewer transceivers, then the
// wider principal beam.
bool better(const Candidate& a, const Candidate& b) {
  if (a.estimated_cost != b.estimated_cost) return a.estimated_cost < b.estimated_cost;
  if (a.cfg.m != b.cfg.m) return a.cfg.m < b.cfg.m;
  return a.cfg.alpha > b.cfg.alpha;
}

}  // namespace

void OptimizerInputs::validate() const {
  link.validate();
  energy.validate();
  cost.validate();
  if (v_max < 0) throw Error(ErrorCode::kInvalidArgument, "v_max must be >= 0");
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");
  if (n_nodes < 0) throw Error(ErrorCode::kInvalidArgument, "n_nodes must be >= 0");
  if (!(area > 0.0)) throw Error(ErrorCode::kInvalidArgument, "area must be > 0");
}

Angle grid_angle(int k, double step_deg) { return Angle::degrees(k * step_deg); }

Angle alpha_max(const LinkBudgetParams& link, double step_deg,
                PowerConvention convention) {
  link.validate();
  require_step(step_deg);
  int last = 0;
  for (int k = 1; k * step_deg < 180.0; ++k) {
    if (border_power_principal(link, grid_angle(k, step_deg), convention) < link.rho_rx) {
      break;
    }
    last = k;
  }
  if (last == 0) {
    throw Error(ErrorCode::kNoFeasibleAlpha,
                "no principal beam width on the grid meets rho_rx");
  }
  return grid_angle(last, step_deg);
}

Angle beta_max(const LinkBudgetParams& link, Angle alpha, int m, double step_deg,
               PowerConvention convention) {
  link.validate();
  require_step(step_deg);
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "beta_max needs m >= 1");

  std::optional<int> last;
  for (int k = 1; k * step_deg < 180.0; ++k) {
    const Angle beta = grid_angle(k, step_deg);
    GeometryIntermediates g;
    try {
      g = extended_geometry(link, MfsoConfig{alpha, m, beta});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kGeometryInfeasible && !last) continue;
      break;
    }
    if (joint_power(link, g.l_j, beta, convention) < link.rho_rx) break;
    last = k;
  }
  if (!last) {
    throw Error(ErrorCode::kNoFeasibleBeta,
                "no supplementary beam width meets rho_rx at the joint point (alpha=" +
                    std::to_string(alpha.deg()) + " deg, m=" + std::to_string(m) + ")");
  }
  return grid_angle(*last, step_deg);
}

int m_upper_bound(const EnergyParams& energy, int v_max) {
  energy.validate();
  if (v_max < 0) throw Error(ErrorCode::kInvalidArgument, "v_max must be >= 0");
  const double per_transceiver =
      energy.mu_fso * energy.rho_avion + energy.rho_hcm + energy.rho_fso_tx;
  if (!(per_transceiver > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "serving transceivers draw no power; m is unbounded");
  }
  const double fixed = v_max * energy.mu_fso * energy.rho_avion +
                       v_max * energy.rho_inter + energy.mu_hap * energy.rho_avion +
                       energy.rho_pat;
  const double bound = (energy.e_solar / 24.0 - fixed) / per_transceiver - 1.0;
  if (bound < 0.0) return 0;
  int m = static_cast<int>(std::floor(bound));
  // Snap to the exact feasibility frontier; the closed form can be off by
  // one ulp at integer boundaries.
  while (m > 0 && !solar_feasible(energy, m + 1, v_max)) --m;
  while (solar_feasible(energy, m + 2, v_max)) ++m;
  return m;
}

int estimate_hap_count(double r_ext, const OptimizerInputs& inputs) {
  if (!(r_ext > 0.0)) throw Error(ErrorCode::kInvalidArgument, "r_ext must be > 0");
  if (inputs.w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");
  const double by_capacity = static_cast<double>(inputs.n_nodes) / inputs.w;
  const double by_area = inputs.area / (2.0 * r_ext * r_ext);
  const double k = std::ceil(std::max(by_capacity, by_area));
  if (k > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "HAP count estimate overflows");
  }
  return static_cast<int>(k);
}

double estimate_cost(int k_hat, int m, const OptimizerInputs& inputs) {
  const CostParams& c = inputs.cost;
  return k_hat * (c.amort_hap + (m + inputs.v_max + 1) * c.amort_fso +
                  c.maint_onetime / c.maint_cycle_days);
}

Candidate evaluate_candidate(const OptimizerInputs& inputs, const MfsoConfig& cfg) {
  Candidate c;
  c.cfg = cfg;
  if (cfg.m == 0) c.cfg.beta.reset();
  c.r_ext = coverage_radius(inputs.link, c.cfg);
  c.k_hat = estimate_hap_count(c.r_ext, inputs);
  c.estimated_cost = estimate_cost(c.k_hat, cfg.m, inputs);
  return c;
}

OptimalConfig find_optimal_mfso(const OptimizerInputs& inputs, double step_deg) {
  inputs.validate();
  require_step(step_deg);
  if (!solar_feasible(inputs.energy, 1, inputs.v_max)) {
    throw Error(ErrorCode::kEnergyInfeasible,
                "a single serving transceiver with v_max inter-HAP links exceeds "
                "the solar budget");
  }
  const Angle a_max = alpha_max(inputs.link, step_deg, inputs.convention);
  const int k_max = static_cast<int>(std::lround(a_max.deg() / step_deg));
  const int m_max = m_upper_bound(inputs.energy, inputs.v_max);

  std::optional<Candidate> best;
  for (int k = k_max; k >= 1; --k) {
    const Angle alpha = grid_angle(k, step_deg);
    for (int m = 0; m <= m_max; ++m) {
      MfsoConfig cfg{alpha, m, std::nullopt};
      if (m > 0) {
        try {
          cfg.beta = beta_max(inputs.link, alpha, m, step_deg, inputs.convention);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kNoFeasibleBeta) continue;
          throw;
        }
      }
      const Candidate c = evaluate_candidate(inputs, cfg);
      if (!best || better(c, *best)) best = c;
    }
  }
  // alpha_max succeeded, so the m = 0 candidate always exists.
  return OptimalConfig{best->cfg, best->r_ext, best->k_hat, best->estimated_cost};
}

}  // namespace hapfso
