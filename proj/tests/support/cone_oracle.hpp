#pragma once

// Numeric reconstruction of the extended coverage radius straight from the
// cone geometry: tilt the supplementary axis until its cone passes through
// K (principal border on the bisector between two supplementary beams), then
// walk the ground ray OK and find where it leaves the supplementary cone.
// Shares nothing with the closed form under test.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace oracle {

using Vec = std::array<double, 3>;

inline double angle_between(const Vec& u, const Vec& v) {
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  const double nu = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  const double nv = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double c = dot / (nu * nv);
  return std::acos(c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c));
}

template <typename F>
double bisect(F f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct ConeRoots {
  double r_alpha = 0.0;
  std::vector<double> crossings;  // ground radii along OK on the cone boundary

  // The crossing that is not K itself.
  std::optional<double> extended() const {
    std::optional<double> best;
    for (double r : crossings) {
      if (!best || std::abs(r - r_alpha) > std::abs(*best - r_alpha)) best = r;
    }
    return best;
  }
};

/// Angles in radians, h in metres.
inline std::optional<ConeRoots> cone_roots(double alpha, int m, double beta, double h) {
  const double pi = std::numbers::pi;
  const double r_alpha = h * std::tan(alpha / 2.0);
  const Vec hap{0.0, 0.0, h};
  const Vec k{r_alpha * std::cos(pi / m), r_alpha * std::sin(pi / m), 0.0};
  const Vec to_k{k[0] - hap[0], k[1] - hap[1], k[2] - hap[2]};
  auto axis = [](double tilt) { return Vec{std::sin(tilt), 0.0, -std::cos(tilt)}; };
  auto off_cone = [&](double tilt) { return angle_between(axis(tilt), to_k) - beta / 2.0; };

  // Outward root of off_cone in tilt.
  const int n_tilt = 20000;
  double best_tilt = 0.0;
  double best_val = off_cone(0.0);
  for (int i = 1; i <= n_tilt; ++i) {
    const double t = (pi / 2.0) * i / n_tilt;
    const double v = off_cone(t);
    if (v < best_val) {
      best_val = v;
      best_tilt = t;
    }
  }
  if (best_val > 0.0) return std::nullopt;
  double hi = -1.0;
  for (int i = 0; i <= n_tilt; ++i) {
    const double t = best_tilt + (pi / 2.0 - best_tilt) * i / n_tilt;
    if (off_cone(t) > 0.0) {
      hi = t;
      break;
    }
  }
  if (hi < 0.0) return std::nullopt;
  const Vec a = axis(bisect(off_cone, best_tilt, hi));

  auto edge = [&](double phi) {
    const double r = h * std::tan(phi);
    const Vec p{r * std::cos(pi / m) - hap[0], r * std::sin(pi / m) - hap[1], -hap[2]};
    return angle_between(p, a) - beta / 2.0;
  };
  ConeRoots out;
  out.r_alpha = r_alpha;
  const int n_phi = 40000;
  const double eps = 1e-9;
  double prev_phi = eps;
  double prev = edge(prev_phi);
  for (int i = 1; i <= n_phi; ++i) {
    const double phi = eps + (pi / 2.0 - 2.0 * eps) * i / n_phi;
    const double v = edge(phi);
    if ((prev < 0.0) != (v < 0.0)) out.crossings.push_back(h * std::tan(bisect(edge, prev_phi, phi)));
    prev_phi = phi;
    prev = v;
  }
  return out;
}

}  // namespace oracle
