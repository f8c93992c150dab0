#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hapfso/error.hpp"
#include "hapfso/link_budget.hpp"

using namespace hapfso;

namespace {

// Simpson integral of the density over the spherical cap at distance r.
double cap_power(const LinkBudgetParams& p, double r, Angle alpha) {
  const int n = 2000;
  const double half = alpha.rad() / 2.0;
  const double step = half / n;
  const double rho = radiation_density(p, r, alpha);
  auto ring = [&](double t) { return rho * 2.0 * std::numbers::pi * r * r * std::sin(t); };
  double sum = ring(0.0) + ring(half);
  for (int i = 1; i < n; ++i) sum += ring(i * step) * (i % 2 ? 4.0 : 2.0);
  return sum * step / 3.0;
}

}  // namespace

TEST_CASE("density integrates to the transmitted power") {
  LinkBudgetParams p;
  for (double deg : {1.0, 10.0, 37.0, 67.0, 120.0, 179.0}) {
    for (double r : {100.0, 20000.0, 50000.0}) {
      CHECK(cap_power(p, r, Angle::degrees(deg)) == doctest::Approx(p.p_tx).epsilon(1e-10));
    }
  }
}

TEST_CASE("received power equals density times aperture area times attenuation") {
  LinkBudgetParams p;
  for (double deg : {5.0, 37.0, 90.0}) {
    for (double l : {20000.0, 23000.0, 60000.0}) {
      const Angle a = Angle::degrees(deg);
      const double literal = radiation_density(p, l, a) * std::numbers::pi * p.r_rx * p.r_rx *
                             std::exp(-p.sigma * l);
      CHECK(received_power(p, l, a) == doctest::Approx(literal).epsilon(1e-15));
    }
  }
}

TEST_CASE("vertical attenuation is e^-sigma*H") {
  LinkBudgetParams p;
  const Angle a = Angle::degrees(37);
  const double slant = p.h / std::cos(a.rad() / 2.0);
  const double unattenuated = received_power(p, slant, a, 0.0);
  CHECK(border_power_principal(p, a) / unattenuated == doctest::Approx(std::exp(-0.07)));
  CHECK(border_power_principal(p, a, PowerConvention::geometric()) / unattenuated ==
        doctest::Approx(std::exp(-p.sigma * slant)));
}

TEST_CASE("border power strictly decreases with beam width") {
  for (double r_rx : {0.05, 2.0, 4.0}) {
    for (PowerConvention c : {PowerConvention::tabulated(), PowerConvention::geometric()}) {
      LinkBudgetParams p;
      p.r_rx = r_rx;
      double prev = border_power_principal(p, Angle::degrees(0.1), c);
      for (int k = 2; k < 1800; ++k) {
        const double cur = border_power_principal(p, Angle::degrees(0.1 * k), c);
        REQUIRE(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("37 degrees is the widest whole-degree principal beam at 2 m aperture") {
  LinkBudgetParams p;
  CHECK(border_power_principal(p, Angle::degrees(37)) >= p.rho_rx);
  CHECK(border_power_principal(p, Angle::degrees(38)) < p.rho_rx);
  p.r_rx = 4.0;
  CHECK(border_power_principal(p, Angle::degrees(67)) >= p.rho_rx);
  CHECK(border_power_principal(p, Angle::degrees(68)) < p.rho_rx);
  CHECK(border_power_principal(p, Angle::degrees(67), PowerConvention::geometric()) < p.rho_rx);
}

TEST_CASE("principal radius") {
  LinkBudgetParams p;
  CHECK(principal_radius(p, Angle::degrees(37)) == doctest::Approx(6691.9).epsilon(1e-5));
  CHECK(principal_radius(p, Angle::degrees(67)) == doctest::Approx(13237.7).epsilon(1e-5));
  CHECK(principal_radius(p, Angle::degrees(0)) == 0.0);
}

TEST_CASE("supplementary capture conventions") {
  LinkBudgetParams p;
  const Angle b = Angle::degrees(16);
  const double l = 23000.0;
  const double full = joint_power(p, l, b, PowerConvention::geometric());
  CHECK(full == doctest::Approx(received_power(p, l, b)).epsilon(1e-15));
  const double half = joint_power(p, l, b, PowerConvention::tabulated());
  CHECK(half / full == doctest::Approx((1.0 - std::cos(b.rad() / 2.0)) / (1.0 - std::cos(b.rad()))));
}

TEST_CASE("degenerate and invalid inputs") {
  LinkBudgetParams p;
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kConfig;
  };
  CHECK(code_of([&] { border_power_principal(p, Angle::degrees(0)); }) == ErrorCode::kDegenerateBeam);
  CHECK(code_of([&] { joint_power(p, 20000.0, Angle::degrees(0)); }) == ErrorCode::kDegenerateBeam);
  CHECK(code_of([&] { radiation_density(p, 10.0, Angle::degrees(0)); }) == ErrorCode::kDegenerateBeam);
  CHECK(code_of([&] { radiation_density(p, 0.0, Angle::degrees(10)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { border_power_principal(p, Angle::degrees(180)); }) == ErrorCode::kInvalidArgument);
  p.r_rx = 0.0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::kInvalidArgument);
  p.r_rx = 2.0;
  p.sigma = -1.0;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::kInvalidArgument);
}
