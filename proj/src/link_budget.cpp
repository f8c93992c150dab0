#include "hapfso/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hapfso/error.hpp"

namespace hapfso {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

// Captured power for a cone of half-angle `half_width`; shared by the
// principal and supplementary beams.
double capture(const LinkBudgetParams& params, double distance,
               double half_width, double attenuation_length) {
  require(distance > 0.0, ErrorCode::kInvalidArgument,
          "slant distance must be positive");
  require(half_width > 0.0, ErrorCode::kDegenerateBeam,
          "beam width must be positive");
  require(half_width <= kPi, ErrorCode::kInvalidArgument,
          "beam half-width exceeds pi");
  const double cap = 1.0 - std::cos(half_width);
  return std::exp(-params.sigma * attenuation_length) * params.p_tx *
         params.r_rx * params.r_rx / (2.0 * distance * distance * cap);
}

}  // namespace

void LinkBudgetParams::validate() const {
  require(std::isfinite(sigma) && sigma >= 0.0, ErrorCode::kInvalidArgument,
          "sigma must be >= 0");
  require(p_tx > 0.0, ErrorCode::kInvalidArgument, "p_tx must be > 0");
  require(r_rx > 0.0, ErrorCode::kInvalidArgument, "r_rx must be > 0");
  require(rho_rx > 0.0, ErrorCode::kInvalidArgument, "rho_rx must be > 0");
  require(h > 0.0, ErrorCode::kInvalidArgument, "h must be > 0");
}

double radiation_density(const LinkBudgetParams& params, double r,
                         Angle alpha) {
  require(r > 0.0, ErrorCode::kInvalidArgument, "distance must be positive");
  require(alpha.rad() > 0.0, ErrorCode::kDegenerateBeam,
          "beam width must be positive");
  require(alpha.rad() <= kPi, ErrorCode::kInvalidArgument,
          "beam width exceeds pi");
  return params.p_tx /
         (2.0 * kPi * r * r * (1.0 - std::cos(alpha.rad() / 2.0)));
}

double received_power(const LinkBudgetParams& params, double slant_distance,
                      Angle beam_width) {
  return received_power(params, slant_distance, beam_width, slant_distance);
}

double received_power(const LinkBudgetParams& params, double slant_distance,
                      Angle beam_width, double attenuation_length) {
  require(beam_width.rad() <= kPi, ErrorCode::kInvalidArgument,
          "beam width exceeds pi");
  return capture(params, slant_distance, beam_width.rad() / 2.0,
                 attenuation_length);
}

double border_power_principal(const LinkBudgetParams& params, Angle alpha,
                              PowerConvention convention) {
  require(alpha.rad() < kPi, ErrorCode::kInvalidArgument,
          "principal beam must be narrower than pi");
  require(alpha.rad() > 0.0, ErrorCode::kDegenerateBeam,
          "beam width must be positive");
  const double slant = params.h / std::cos(alpha.rad() / 2.0);
  const double path =
      convention.principal == AttenuationPath::kSlant ? slant : params.h;
  return received_power(params, slant, alpha, path);
}

double joint_power(const LinkBudgetParams& params, double slant_distance,
                   Angle beta, PowerConvention convention) {
  const double path = convention.joint == AttenuationPath::kSlant
                          ? slant_distance
                          : params.h;
  const double half_width =
      convention.supplementary == SupplementaryWidth::kFullAngle
          ? beta.rad() / 2.0
          : beta.rad();
  return capture(params, slant_distance, half_width, path);
}

double principal_radius(const LinkBudgetParams& params, Angle alpha) {
  require(alpha.rad() >= 0.0 && alpha.rad() < kPi,
          ErrorCode::kInvalidArgument, "alpha must lie in [0, pi)");
  return params.h * std::tan(alpha.rad() / 2.0);
}

}  // namespace hapfso
