#pragma once

#include <optional>

#include "hapfso/angle.hpp"
#include "hapfso/link_budget.hpp"

namespace hapfso {

/// A principal nadir beam of width `alpha` plus `m` identical supplementary
/// beams of width `beta` arranged evenly around it. With m == 0 there is no
/// supplementary ring and `beta` is empty.
struct MfsoConfig {
  Angle alpha;
  int m = 0;
  std::optional<Angle> beta;

  bool operator==(const MfsoConfig&) const = default;
};

/// Intermediate quantities of the extended-coverage construction.
struct GeometryIntermediates {
  double tan_gamma = 0.0;
  double tan_theta = 0.0;
  double tan_half_xi_plus_alpha = 0.0;
  double r_alpha = 0.0;  // principal footprint radius, m
  double r_ext = 0.0;    // extended coverage radius, m
  double l_j = 0.0;      // slant distance to the joint point J, m
};

/// tan(gamma) = tan(alpha/2) cos(pi/m); gamma is the angle between the nadir
/// and the direction to the midpoint of the two principal/supplementary
/// footprint intersections.
double tan_gamma(Angle alpha, int m);

/// tan(theta) = sqrt(sin^2(beta/2) - sin^2(alpha/2) sin^2(pi/m)) / cos(beta/2).
/// Throws kGeometryInfeasible when the radicand is negative, i.e. the
/// supplementary cone cannot reach both intersection points.
double tan_theta(Angle alpha, Angle beta, int m);

/// Full construction for a configuration with m >= 1. Throws
/// kGeometryInfeasible or kAngleOverflow (extended ray at or beyond the
/// horizon).
GeometryIntermediates extended_geometry(const LinkBudgetParams& params,
                                        const MfsoConfig& cfg);

/// Extended coverage radius; the principal radius when m == 0.
double extended_radius(const LinkBudgetParams& params, const MfsoConfig& cfg);

/// Ground radius fully covered by the union of footprints: the principal
/// disk is always covered, so this is max(R_alpha, R_ext).
double coverage_radius(const LinkBudgetParams& params, const MfsoConfig& cfg);

/// sqrt(H^2 + r_ext^2).
double slant_distance_to_joint(const LinkBudgetParams& params, double r_ext);

}  // namespace hapfso
