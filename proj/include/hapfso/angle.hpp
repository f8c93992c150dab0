#pragma once

#include <compare>
#include <numbers>

namespace hapfso {

/// Plane angle. Stored in radians; constructed and reported in either unit.
class Angle {
 public:
  constexpr Angle() = default;

  static constexpr Angle radians(double value) { return Angle(value); }
  static constexpr Angle degrees(double value) {
    return Angle(value * std::numbers::pi / 180.0);
  }

  constexpr double rad() const { return value_; }
  constexpr double deg() const { return value_ * 180.0 / std::numbers::pi; }
  constexpr Angle half() const { return Angle(value_ / 2.0); }

  constexpr auto operator<=>(const Angle&) const = default;

 private:
  constexpr explicit Angle(double value) : value_(value) {}
  double value_ = 0.0;
};

}  // namespace hapfso
