#include "hapfso/coverage_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hapfso/error.hpp"

namespace hapfso {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ring(int m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "supplementary ring needs m >= 1, got " + std::to_string(m));
  }
}

}  // namespace

double tan_gamma(Angle alpha, int m) {
  require_ring(m);
  return std::tan(alpha.rad() / 2.0) * std::cos(kPi / m);
}

double tan_theta(Angle alpha, Angle beta, int m) {
  require_ring(m);
  if (!(beta.rad() > 0.0 && beta.rad() < kPi)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must lie in (0, pi)");
  }
  const double sb = std::sin(beta.rad() / 2.0);
  const double sa = std::sin(alpha.rad() / 2.0);
  const double sm = std::sin(kPi / m);
  const double radicand = sb * sb - sa * sa * sm * sm;
  if (radicand < 0.0) {
    throw Error(ErrorCode::kGeometryInfeasible,
                "supplementary beam too narrow to reach both joint points");
  }
  return std::sqrt(radicand) / std::cos(beta.rad() / 2.0);
}

GeometryIntermediates extended_geometry(const LinkBudgetParams& params,
                                        const MfsoConfig& cfg) {
  require_ring(cfg.m);
  if (!cfg.beta) {
    throw Error(ErrorCode::kInvalidArgument, "m >= 1 requires a beta");
  }
  if (!(cfg.alpha.rad() > 0.0 && cfg.alpha.rad() < kPi)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, pi)");
  }

  GeometryIntermediates g;
  g.tan_gamma = tan_gamma(cfg.alpha, cfg.m);
  g.tan_theta = tan_theta(cfg.alpha, *cfg.beta, cfg.m);
  g.r_alpha = principal_radius(params, cfg.alpha);

  // gamma + theta is the tilt of the supplementary axis from nadir.
  const double denom_sum = 1.0 - g.tan_gamma * g.tan_theta;
  if (denom_sum <= 0.0) {
    throw Error(ErrorCode::kAngleOverflow,
                "supplementary axis at or above the horizon");
  }
  const double t =
      (g.tan_gamma + g.tan_theta) / denom_sum * std::cos(kPi / cfg.m);
  g.tan_half_xi_plus_alpha = t;

  // R_ext = H tan(2 phi - alpha/2) with tan(phi) = t.
  const double ta = std::tan(cfg.alpha.rad() / 2.0);
  const double denom = 1.0 - t * t + 2.0 * t * ta;
  if (denom <= 0.0) {
    throw Error(ErrorCode::kAngleOverflow,
                "extended ray at or above the horizon");
  }
  g.r_ext = params.h * (2.0 * t - ta * (1.0 - t * t)) / denom;
  if (!(g.r_ext > 0.0)) {
    throw Error(ErrorCode::kGeometryInfeasible,
                "extended ray does not meet the ground on the ring side");
  }
  g.l_j = slant_distance_to_joint(params, g.r_ext);
  return g;
}

double extended_radius(const LinkBudgetParams& params, const MfsoConfig& cfg) {
  if (cfg.m == 0) return principal_radius(params, cfg.alpha);
  return extended_geometry(params, cfg).r_ext;
}

double coverage_radius(const LinkBudgetParams& params, const MfsoConfig& cfg) {
  return std::max(principal_radius(params, cfg.alpha),
                  extended_radius(params, cfg));
}

double slant_distance_to_joint(const LinkBudgetParams& params, double r_ext) {
  if (r_ext < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "r_ext must be >= 0");
  }
  return std::sqrt(params.h * params.h + r_ext * r_ext);
}

}  // namespace hapfso
