#pragma once

#include "hapfso/angle.hpp"

namespace hapfso {

/// Optical constants of the HAP-to-ground downlink.
struct LinkBudgetParams {
  double sigma = 3.5e-6;     // attenuation coefficient, 1/m
  double p_tx = 1.0;         // laser transmit power, W
  double r_rx = 2.0;         // receiver aperture radius, m
  double rho_rx = 7.76e-8;   // required received power, W
  double h = 20000.0;        // HAP elevation, m

  /// Throws Error(kInvalidArgument) unless sigma >= 0 and the rest are > 0.
  void validate() const;
};

/// Path length used by the Beer-Lambert term.
enum class AttenuationPath {
  kSlant,     // e^{-sigma L}, L the slant distance to the receiver
  kVertical,  // e^{-sigma H}, the vertical depth of the atmosphere column
};

/// Angle entering the capture term 1 - cos(x) of the supplementary beam.
enum class SupplementaryWidth {
  kFullAngle,  // x = beta / 2
  kHalfAngle,  // x = beta
};

/// How border powers are evaluated. `tabulated()` reproduces the published
/// planning tables (alpha_max 37/67 deg, R_ext 11929/12174 m, ...);
/// `geometric()` is the straight slant-path, full-angle reading.
struct PowerConvention {
  AttenuationPath principal = AttenuationPath::kVertical;  // border of R_alpha
  AttenuationPath joint = AttenuationPath::kSlant;         // joint point J
  SupplementaryWidth supplementary = SupplementaryWidth::kHalfAngle;

  static constexpr PowerConvention tabulated() {
    return {AttenuationPath::kVertical, AttenuationPath::kSlant,
            SupplementaryWidth::kHalfAngle};
  }
  static constexpr PowerConvention geometric() {
    return {AttenuationPath::kSlant, AttenuationPath::kSlant,
            SupplementaryWidth::kFullAngle};
  }

  bool operator==(const PowerConvention&) const = default;
};

/// Power per unit area at distance r inside a uniform cone of full width alpha:
/// P_tx / (2 pi r^2 (1 - cos(alpha/2))).
double radiation_density(const LinkBudgetParams& params, double r, Angle alpha);

/// Power captured by a receiver aperture at `slant_distance` from the source,
/// attenuated along the same distance.
double received_power(const LinkBudgetParams& params, double slant_distance,
                      Angle beam_width);

/// As above, with the Beer-Lambert term evaluated over `attenuation_length`.
double received_power(const LinkBudgetParams& params, double slant_distance,
                      Angle beam_width, double attenuation_length);

/// Minimum received power over the principal footprint (at its border).
double border_power_principal(
    const LinkBudgetParams& params, Angle alpha,
    PowerConvention convention = PowerConvention::tabulated());

/// Power from a supplementary beam of width `beta` at slant distance
/// `slant_distance` (the joint point J).
double joint_power(const LinkBudgetParams& params, double slant_distance,
                   Angle beta,
                   PowerConvention convention = PowerConvention::tabulated());

/// Radius H tan(alpha/2) of the principal footprint.
double principal_radius(const LinkBudgetParams& params, Angle alpha);

}  // namespace hapfso
