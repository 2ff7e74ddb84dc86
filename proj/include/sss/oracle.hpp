#pragma once
/**
 * @file oracle.hpp
 * @brief Brute-force checkers built only from point/segment separations and
 *        point-in-polygon: configuration clearance, angle-sweep forbidden
 *        sets, a 4D grid planner and path validation.
 *
 * Nothing here uses the forbidden-zone or classification code, so agreement
 * with them is independent evidence.
 */

#include "sss/cspace.hpp"
#include "sss/environment.hpp"

#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sss::oracle {

/// Smallest thin separation of the segment from any polygon edge.
[[nodiscard]] inline double segment_obstacle_sep(const Segment2& s, const Environment& env) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& poly : env.polygons()) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      best = std::min(best, sep_segment_segment(s, {poly[i], poly[(i + 1) % poly.size()]}));
    }
  }
  return best;
}

/**
 * Signed clearance of the thick robot: min separation of both links from ∂Ω
 * minus τ; if a footprint point lies inside Ω the value is -(τ + sep).
 * Positive iff the configuration is free.
 */
[[nodiscard]] inline double config_clearance(const Config& c, const Environment& env, const RobotSpec& r) {
  const Footprints fp = footprints(c, r);
  const double s = std::min(segment_obstacle_sep({fp.a0, fp.a1}, env), segment_obstacle_sep({fp.a0, fp.a2}, env));
  if (env.point_in_obstacle(fp.a0) || env.point_in_obstacle(fp.a1) || env.point_in_obstacle(fp.a2)) {
    return -r.tau - s;
  }
  return s - r.tau;
}

[[nodiscard]] inline bool config_free(const Config& c, const Environment& env, const RobotSpec& r) {
  return config_clearance(c, env, r) > 0.0;
}

/// Either a corner or a wall, the target of a sweep.
using Target = Feature;

struct SweepResult {
  int n = 0;
  std::vector<char> samples;  // samples[k]: angle 2πk/n is forbidden
  AngularSet intervals;       // forbidden samples widened by one spacing

  [[nodiscard]] double spacing() const noexcept { return kTwoPi / n; }
  [[nodiscard]] double angle(int k) const noexcept { return kTwoPi * k / n; }
};

/// Forbidden angles for links based anywhere in `bases` against T, by sampling.
[[nodiscard]] inline SweepResult sweep_forbidden(const std::vector<Point2>& bases, const Target& t,
                                                 const LinkGeom& g, int n) {
  if (n < 3600) throw std::invalid_argument("sweep_forbidden: need at least 3600 samples");
  SweepResult out;
  out.n = n;
  out.samples.assign(n, 0);
  std::vector<AngularSet::Piece> pieces;
  const double h = kTwoPi / n;
  for (int k = 0; k < n; ++k) {
    const double th = h * k;
    for (const auto& b : bases) {
      if (link_clearance(b, th, g, t) <= 0.0) {
        out.samples[k] = 1;
        break;
      }
    }
    if (out.samples[k]) {
      const double lo = th - h, hi = th + h;
      if (lo < 0.0) {
        pieces.push_back({lo + kTwoPi, kTwoPi});
        pieces.push_back({0.0, hi});
      } else if (hi > kTwoPi) {
        pieces.push_back({lo, kTwoPi});
        pieces.push_back({0.0, hi - kTwoPi});
      } else {
        pieces.push_back({lo, hi});
      }
    }
  }
  out.intervals = AngularSet::from_pieces(std::move(pieces));
  return out;
}

// ---------------------------------------------------------------------------
// Path validation
// ---------------------------------------------------------------------------

struct PathCheck {
  double min_clearance = std::numeric_limits<double>::infinity();
  double min_angle_dist = std::numeric_limits<double>::infinity();  // min d(θ₁,θ₂)
  double band_margin = std::numeric_limits<double>::infinity();     // min d(θ₁,θ₂) - κ, κ ≥ 0 only
  long samples = 0;

  [[nodiscard]] bool ok() const noexcept { return min_clearance > 0.0 && band_margin > 0.0; }
};

/// Point at parameter s ∈ [0,1] on the segment a→b (linear in x,y; shortest arc in each θ).
[[nodiscard]] inline Config interpolate(const Config& a, const Config& b, double s) {
  return Config{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y), a.theta1 + s * angle_delta(a.theta1, b.theta1),
                a.theta2 + s * angle_delta(a.theta2, b.theta2)}
      .normalized();
}

/// Densifies every path segment into `density` configurations and records the worst values.
[[nodiscard]] inline PathCheck validate_path(const std::vector<Config>& path, const Environment& env,
                                             const RobotSpec& r, int density) {
  PathCheck out;
  auto visit = [&](const Config& c) {
    out.min_clearance = std::min(out.min_clearance, config_clearance(c, env, r));
    const double d = angle_dist(c.theta1, c.theta2);
    out.min_angle_dist = std::min(out.min_angle_dist, d);
    if (r.non_crossing()) out.band_margin = std::min(out.band_margin, d - r.kappa);
    ++out.samples;
  };
  if (path.empty()) return out;
  visit(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    for (int k = 1; k <= density; ++k) visit(interpolate(path[i - 1], path[i], static_cast<double>(k) / density));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid planner
// ---------------------------------------------------------------------------

struct GridSpec {
  int nx = 32;
  int ny = 32;
  int nt = 32;  // cells per angle
  long max_cells = 10'000'000;
};

struct GridResult {
  bool path = false;
  long evaluated = 0;
  std::vector<Config> configs;  // cell centres from α's cell to β's cell, framed by α and β
};

/**
 * Breadth-first search on the 4D lattice over b0 × [0,2π)². A cell is usable
 * iff its centre has clearance above the worst displacement inside the cell
 * and the whole cell stays off the band, so a PATH answer is sound; a NO-PATH
 * answer is inconclusive.
 */
[[nodiscard]] inline GridResult grid_plan(const Environment& env, const RobotSpec& r, const Config& alpha,
                                          const Config& beta, const GridSpec& spec,
                                          std::optional<Rect> b0 = std::nullopt) {
  const Rect box = b0.value_or(env.bbox());
  const long total = static_cast<long>(spec.nx) * spec.ny * spec.nt * spec.nt;
  if (total > spec.max_cells) throw std::length_error("grid_plan: too many cells");
  const double hx = (box.x1 - box.x0) / spec.nx;
  const double hy = (box.y1 - box.y0) / spec.ny;
  const double ht = kTwoPi / spec.nt;
  const double margin = 0.5 * std::hypot(hx, hy) + r.max_ell() * 0.5 * ht;

  auto index = [&](int i, int j, int k, int l) {
    return ((static_cast<long>(i) * spec.ny + j) * spec.nt + k) * spec.nt + l;
  };
  auto centre = [&](int i, int j, int k, int l) {
    return Config{box.x0 + (i + 0.5) * hx, box.y0 + (j + 0.5) * hy, (k + 0.5) * ht, (l + 0.5) * ht};
  };
  auto cell_of = [&](const Config& c) {
    const Config n = c.normalized();
    const int i = std::clamp(static_cast<int>((n.x - box.x0) / hx), 0, spec.nx - 1);
    const int j = std::clamp(static_cast<int>((n.y - box.y0) / hy), 0, spec.ny - 1);
    const int k = std::clamp(static_cast<int>(n.theta1 / ht), 0, spec.nt - 1);
    const int l = std::clamp(static_cast<int>(n.theta2 / ht), 0, spec.nt - 1);
    return std::array<int, 4>{i, j, k, l};
  };

  GridResult out;
  std::vector<signed char> state(total, 0);  // 0 unknown, 1 usable, -1 blocked
  std::vector<long> prev(total, -1);
  auto usable = [&](int i, int j, int k, int l) {
    const long id = index(i, j, k, l);
    if (state[id] == 0) {
      ++out.evaluated;
      const Config c = centre(i, j, k, l);
      bool ok = !r.non_crossing() || angle_dist(c.theta1, c.theta2) > r.kappa + ht;
      ok = ok && config_clearance(c, env, r) > margin;
      state[id] = ok ? 1 : -1;
    }
    return state[id] == 1;
  };

  const auto s = cell_of(alpha);
  const auto g = cell_of(beta);
  if (!usable(s[0], s[1], s[2], s[3]) || !usable(g[0], g[1], g[2], g[3])) return out;
  const long sid = index(s[0], s[1], s[2], s[3]);
  const long gid = index(g[0], g[1], g[2], g[3]);
  std::vector<char> seen(total, 0);
  std::deque<std::array<int, 4>> q{s};
  seen[sid] = 1;
  while (!q.empty() && !seen[gid]) {
    const auto c = q.front();
    q.pop_front();
    const long cid = index(c[0], c[1], c[2], c[3]);
    for (int axis = 0; axis < 4; ++axis) {
      for (int step : {-1, 1}) {
        auto n = c;
        n[axis] += step;
        if (axis < 2) {
          const int lim = axis == 0 ? spec.nx : spec.ny;
          if (n[axis] < 0 || n[axis] >= lim) continue;
        } else {
          n[axis] = (n[axis] + spec.nt) % spec.nt;  // angles wrap
        }
        const long nid = index(n[0], n[1], n[2], n[3]);
        if (seen[nid] || !usable(n[0], n[1], n[2], n[3])) continue;
        seen[nid] = 1;
        prev[nid] = cid;
        q.push_back(n);
      }
    }
  }
  if (!seen[gid]) return out;
  out.path = true;
  std::vector<long> chain;
  for (long v = gid; v != -1; v = prev[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  out.configs.push_back(alpha);
  for (long v : chain) {
    const int l = static_cast<int>(v % spec.nt);
    const int k = static_cast<int>((v / spec.nt) % spec.nt);
    const int j = static_cast<int>((v / spec.nt / spec.nt) % spec.ny);
    const int i = static_cast<int>(v / spec.nt / spec.nt / spec.ny);
    out.configs.push_back(centre(i, j, k, l));
  }
  out.configs.push_back(beta);
  return out;
}

}  // namespace sss::oracle
