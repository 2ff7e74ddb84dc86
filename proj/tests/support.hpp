#pragma once
// Shared helpers for the test programs.

#include "sss/oracle.hpp"

#include <random>
#include <vector>

namespace sss::test {

/// Distance from θ to the nearest arc endpoint of z (infinite for ∅ and S¹).
inline double boundary_dist(const AngularSet& z, double theta) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& I : z.intervals()) {
    if (I.full) continue;
    best = std::min({best, angle_dist(theta, I.s), angle_dist(theta, I.t)});
  }
  return best;
}

/// Samples where z and the sweep disagree, ignoring samples within `tol` of an endpoint of z.
inline int sweep_disagreements(const AngularSet& z, const oracle::SweepResult& sw, double tol = 1e-9) {
  int bad = 0;
  for (int k = 0; k < sw.n; ++k) {
    const double th = sw.angle(k);
    if (boundary_dist(z, th) <= tol) continue;
    if (static_cast<bool>(sw.samples[k]) != z.contains(th)) ++bad;
  }
  return bad;
}

/// Sampled forbidden angles that z misses (a soundness violation for an over-approximation).
inline int sweep_escapes(const AngularSet& z, const oracle::SweepResult& sw) {
  int bad = 0;
  for (int k = 0; k < sw.n; ++k) {
    if (sw.samples[k] && !z.contains(sw.angle(k))) ++bad;
  }
  return bad;
}

/// k×k grid of base points covering a rectangle, corners included.
inline std::vector<Point2> grid_bases(const Rect& r, int k) {
  std::vector<Point2> out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double u = k == 1 ? 0.5 : static_cast<double>(i) / (k - 1);
      const double v = k == 1 ? 0.5 : static_cast<double>(j) / (k - 1);
      out.push_back({r.x0 + u * (r.x1 - r.x0), r.y0 + v * (r.y1 - r.y0)});
    }
  }
  return out;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace sss::test

namespace sss::test {

/// Whether some base forbids θ.
inline bool any_forbids(const std::vector<Point2>& bases, const Feature& f, const LinkGeom& g, double theta) {
  for (const auto& b : bases) {
    if (link_clearance(b, theta, g, f) <= 0.0) return true;
  }
  return false;
}

/**
 * Measure of the union of per-base zones: the sweep locates the arc ends to
 * one sample, bisection then pins each end to ~1e-13.
 */
inline double refined_union_measure(const std::vector<Point2>& bases, const Feature& f, const LinkGeom& g, int n) {
  const auto sw = oracle::sweep_forbidden(bases, f, g, n);
  double m = 0.0;
  int on = 0;
  for (int k = 0; k < n; ++k) on += sw.samples[k];
  if (on == n) return kTwoPi;
  if (on == 0) return 0.0;
  for (int k = 0; k < n; ++k) {
    const int j = (k + 1) % n;
    if (sw.samples[k] == sw.samples[j]) continue;
    // boundary between angle(k) and angle(k)+h
    double lo = sw.angle(k), hi = sw.angle(k) + sw.spacing();
    const bool lo_state = sw.samples[k];
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (any_forbids(bases, f, g, mid) == lo_state ? lo : hi) = mid;
    }
    const double b = 0.5 * (lo + hi);
    m += lo_state ? b : -b;  // arc end adds, arc start subtracts
  }
  if (m < 0.0) m += kTwoPi;  // an arc straddles angle 0
  return m;
}

}  // namespace sss::test
