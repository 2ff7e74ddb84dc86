#pragma once
/**
 * @file forbidden.hpp
 * @brief Forbidden angles of a thick link L(ℓ,τ).
 *
 * An angle θ is forbidden for a pair of closed sets (S,T) when some base
 * s ∈ S puts the footprint [s, s + ℓ(cos θ, sin θ)] ⊕ D(0,τ) in contact with
 * T. Building blocks:
 *
 *   - point/point:   [ν - δ, ν + δ] with ν the direction V→C and
 *                    δ = asin(τ/d)                     if d² ≤ τ² + ℓ²
 *                    δ = acos((ℓ² + d² - τ²) / (2dℓ))   otherwise
 *   - vertex/wall:   [θ(V,A) - δ(V,A), θ(V,B) + δ(V,B)] for the left and
 *                    right stops A, B of the wall
 *   - side/corner:   the vertex/wall zone of (C,S) rotated by π
 *   - box/wall and box/corner: union of at most three of the above.
 *
 * Every returned zone is widened outward by kAngleEps so rounding never
 * shrinks it.
 */

#include "sss/geometry.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sss {

namespace detail {

[[nodiscard]] inline AngularSet arc(double lo, double hi) {
  if (hi - lo + 2.0 * kAngleEps >= kTwoPi) return AngularSet::circle();
  return AngularSet(AngularInterval{normalize_angle(lo - kAngleEps), normalize_angle(hi + kAngleEps), false});
}

}  // namespace detail

/// Direction of C as seen from V, in [0, 2π). Throws if V == C.
[[nodiscard]] inline double theta_nominal(Point2 V, Point2 C) {
  if (V == C) throw std::invalid_argument("theta_nominal: coincident points have no direction");
  return normalize_angle(std::atan2(C.y - V.y, C.x - V.x));
}

/// Half-width of the point/point zone at distance d, assuming τ < d ≤ ℓ + τ.
[[nodiscard]] inline double correction_angle(double d, const LinkGeom& g) noexcept {
  const double l = g.ell, t = g.tau;
  if (d >= l + t) return 0.0;
  if (d * d <= t * t + l * l) return std::asin(std::clamp(t / d, -1.0, 1.0));
  return std::acos(std::clamp((l * l + d * d - t * t) / (2.0 * d * l), -1.0, 1.0));
}

/// Forb(V, C) for two points.
[[nodiscard]] inline AngularSet forb_point_point(Point2 V, Point2 C, const LinkGeom& g) {
  const double d = dist(V, C);
  if (d <= g.tau) return AngularSet::circle();
  if (d > g.ell + g.tau) return {};
  const double nu = theta_nominal(V, C);
  const double delta = correction_angle(d, g);
  return detail::arc(nu - delta, nu + delta);
}

// ---------------------------------------------------------------------------
// Vertex / wall
// ---------------------------------------------------------------------------

enum class LeftCase { L1, L2, L3 };
enum class RightCase { R1, R2, R3 };

/// Left and right stops of (V, W) and the table case that produced them.
struct StopPair {
  Point2 left;
  Point2 right;
  LeftCase left_case = LeftCase::L3;
  RightCase right_case = RightCase::R3;
};

/// (L1,R1), (L1,R2) and (L2,R1) cannot arise from a wall with C' < C.
[[nodiscard]] constexpr bool stop_case_possible(LeftCase l, RightCase r) noexcept {
  return !((l == LeftCase::L1 && r == RightCase::R1) || (l == LeftCase::L1 && r == RightCase::R2) ||
           (l == LeftCase::L2 && r == RightCase::R1));
}

/**
 * Frame with the wall on the x-axis and V = (0, -σ) below it. The corner with
 * the larger abscissa is C (`xc`), the other C' (`xc_prime`).
 */
struct WallFrame {
  Point2 origin;  // foot of V on the wall's line
  Point2 ux;      // unit x-axis along the wall
  Point2 uy;      // unit y-axis, V lies on its negative side
  double sigma = 0.0;
  double xc_prime = 0.0;
  double xc = 0.0;

  [[nodiscard]] Point2 to_world(double x, double y) const noexcept { return origin + x * ux + y * uy; }
  [[nodiscard]] double rotation() const noexcept { return std::atan2(ux.y, ux.x); }
};

[[nodiscard]] inline WallFrame make_wall_frame(Point2 V, const Segment2& W) {
  WallFrame f;
  f.ux = (1.0 / W.length()) * (W.b - W.a);
  f.uy = {-f.ux.y, f.ux.x};
  if (dot(V - W.a, f.uy) > 0.0) {
    f.ux = -f.ux;
    f.uy = -f.uy;
  }
  f.sigma = -dot(V - W.a, f.uy);
  f.origin = V + f.sigma * f.uy;
  const double xa = dot(W.a - f.origin, f.ux);
  const double xb = dot(W.b - f.origin, f.ux);
  f.xc_prime = std::min(xa, xb);
  f.xc = std::max(xa, xb);
  return f;
}

/// ‖OX*‖: abscissa of the points on the wall's line at distance ℓ+τ from V.
[[nodiscard]] inline double x_star(double sigma, const LinkGeom& g) noexcept {
  return std::sqrt(std::max(0.0, (g.ell + g.tau) * (g.ell + g.tau) - sigma * sigma));
}

/// ‖OX_max‖: abscissa of the left stop against the infinite line.
[[nodiscard]] inline double x_max(double sigma, const LinkGeom& g) noexcept {
  return std::sqrt(std::max(0.0, g.ell * g.ell - (sigma - g.tau) * (sigma - g.tau)));
}

/// Stop selection in the wall frame; expects τ < σ < ℓ+τ and both corners in the annulus.
[[nodiscard]] inline StopPair stops_in_frame(const WallFrame& f, const LinkGeom& g) {
  const double xm = x_max(f.sigma, g);
  StopPair sp;
  double xl, xr;
  if (xm <= f.xc_prime) {
    sp.left_case = LeftCase::L1;
    xl = f.xc_prime;
  } else if (xm < f.xc) {
    sp.left_case = LeftCase::L2;
    xl = xm;
  } else {
    sp.left_case = LeftCase::L3;
    xl = f.xc;
  }
  if (f.xc <= -xm) {
    sp.right_case = RightCase::R1;
    xr = f.xc;
  } else if (f.xc_prime < -xm) {
    sp.right_case = RightCase::R2;
    xr = -xm;
  } else {
    sp.right_case = RightCase::R3;
    xr = f.xc_prime;
  }
  sp.left = f.to_world(xl, 0.0);
  sp.right = f.to_world(xr, 0.0);
  return sp;
}

/**
 * Left/right stops of (V, W). Requires τ < σ < ℓ+τ and both corners at
 * distance in (τ, ℓ+τ) from V; throws std::domain_error otherwise, in which
 * case `forb_vertex_wall` applies the reductions instead.
 */
[[nodiscard]] inline StopPair stops_vertex_wall(Point2 V, const Segment2& W, const LinkGeom& g) {
  if (W.degenerate()) throw std::domain_error("stops_vertex_wall: degenerate wall");
  const WallFrame f = make_wall_frame(V, W);
  const double reach = g.ell + g.tau;
  if (!(g.tau < f.sigma && f.sigma < reach)) throw std::domain_error("stops_vertex_wall: sigma outside (tau, ell+tau)");
  for (const Point2 c : {W.a, W.b}) {
    const double d = dist(V, c);
    if (!(g.tau < d && d < reach)) throw std::domain_error("stops_vertex_wall: corner outside annulus");
  }
  return stops_in_frame(f, g);
}

/// Forb(V, W) for a vertex and a (closed) wall segment.
[[nodiscard]] inline AngularSet forb_vertex_wall(Point2 V, const Segment2& W, const LinkGeom& g) {
  if (W.degenerate()) return forb_point_point(V, W.a, g);
  const double dw = sep_point_segment(V, W);
  if (dw <= g.tau) return AngularSet::circle();
  const double reach = g.ell + g.tau;
  if (dw > reach) return {};

  WallFrame f = make_wall_frame(V, W);
  if (f.sigma <= g.tau) {
    // line is within τ but the segment is not: the nearest corner decides
    const Point2 c = dist(V, W.a) <= dist(V, W.b) ? W.a : W.b;
    return forb_point_point(V, c, g);
  }
  // Clip to the reach disc; the part beyond ℓ+τ witnesses nothing.
  const double xs = x_star(f.sigma, g);
  f.xc_prime = std::max(f.xc_prime, -xs);
  f.xc = std::min(f.xc, xs);
  if (f.xc - f.xc_prime <= 1e-12 * std::max(1.0, reach)) {
    return forb_point_point(V, f.to_world(0.5 * (f.xc + f.xc_prime), 0.0), g);
  }
  if (f.sigma >= reach) return forb_point_point(V, f.origin, g);

  const StopPair sp = stops_in_frame(f, g);
  const double rot = f.rotation();
  auto canon = [&](Point2 p) {
    const double x = dot(p - f.origin, f.ux);
    return std::atan2(f.sigma, x);  // direction from V=(0,-σ) to (x,0)
  };
  const double alpha = canon(sp.left) - correction_angle(dist(V, sp.left), g);
  const double beta = canon(sp.right) + correction_angle(dist(V, sp.right), g);
  return detail::arc(rot + alpha, rot + beta);
}

/// Forb(S, C) for a box side and a corner: Forb(C, S) rotated by π.
[[nodiscard]] inline AngularSet forb_side_corner(const Segment2& S, Point2 C, const LinkGeom& g) {
  return forb_vertex_wall(C, S, g).shifted(kPi);
}

// ---------------------------------------------------------------------------
// Box / feature
// ---------------------------------------------------------------------------

enum class WallCase { Case0, I, II, III };

namespace detail {

/// Whether p lies in the open half-plane outside the box beyond side k (0 bottom, 1 right, 2 top, 3 left).
[[nodiscard]] inline bool beyond_side(const Rect& r, int k, Point2 p) noexcept {
  switch (k) {
    case 0: return p.y < r.y0;
    case 1: return p.x > r.x1;
    case 2: return p.y > r.y1;
    default: return p.x < r.x0;
  }
}

}  // namespace detail

/**
 * Disposition of W against the box: Case0 when W meets Bᵗ ⊕ D(0,τ); II when W
 * lies in H(S) ∩ H(S') for adjacent sides; I when it lies in exactly one
 * H(S); III otherwise.
 */
[[nodiscard]] inline WallCase classify_wall_case(const Rect& bt, const Segment2& W, double tau) {
  if (sep_segment_rect(W, bt) <= tau) return WallCase::Case0;
  auto in_h = [&](int k) { return detail::beyond_side(bt, k, W.a) && detail::beyond_side(bt, k, W.b); };
  for (int k = 0; k < 4; ++k) {
    if (in_h(k) && in_h((k + 1) % 4)) return WallCase::II;
  }
  for (int k = 0; k < 4; ++k) {
    if (in_h(k)) return WallCase::I;
  }
  return WallCase::III;
}

/// Which (box part, feature part) pair produced a cone.
struct ConeSource {
  enum class Kind { VertexWall, SideCorner } kind = Kind::VertexWall;
  int box_part = -1;      // vertex index or side index (Rect::vertices / Rect::sides order)
  int feature_part = -1;  // -1 for the whole wall, 0/1 for its endpoints a/b
};

/// One connected forbidden arc with the pairs that produced it.
struct Cone {
  AngularSet zone;
  std::vector<ConeSource> sources;
};

struct ConeDecomposition {
  bool whole_circle = false;
  std::vector<Cone> cones;

  [[nodiscard]] AngularSet zone() const {
    if (whole_circle) return AngularSet::circle();
    AngularSet z;
    for (const auto& c : cones) z = z.unite(c.zone);
    return z;
  }
};

namespace detail {

struct CandidateEdge {
  Segment2 diff;  // edge of the difference set T ⊕ (-Bᵗ)
  ConeSource source;
  Segment2 side;  // side/wall used to evaluate
  Point2 point;   // vertex/corner used to evaluate
};

/**
 * Groups the front-facing boundary edges of the convex difference set
 * D = T ⊕ (-Bᵗ) (seen from the origin) by supporting line and evaluates each
 * group. A thick link based at the origin meets D iff it meets one of these
 * edges, so the union is exactly Forb(Bᵗ, T).
 */
[[nodiscard]] inline ConeDecomposition cones_from_edges(const std::vector<CandidateEdge>& edges,
                                                        const std::vector<Point2>& hull_points,
                                                        const LinkGeom& g) {
  double scale = 1.0;
  for (const auto& p : hull_points) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
  const double tol = 1e-10 * scale;

  struct Group {
    Point2 normal;
    double offset;
    Cone cone;
  };
  std::vector<Group> groups;
  for (const auto& e : edges) {
    const double len = e.diff.length();
    if (len <= 1e-12 * scale) continue;
    const Point2 dir = (1.0 / len) * (e.diff.b - e.diff.a);
    Point2 n{dir.y, -dir.x};
    double off = dot(n, e.diff.a);
    // orient the normal away from D
    double lo = 0.0, hi = 0.0;
    for (const auto& p : hull_points) {
      const double s = dot(n, p) - off;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (lo < -tol && hi > tol) continue;  // not a boundary edge
    if (hi > tol) {
      n = -n;
      off = -off;
    }
    // front facing: the origin sits strictly outside the supporting line
    if (!(-off > tol)) continue;

    AngularSet z = e.source.kind == ConeSource::Kind::VertexWall ? forb_vertex_wall(e.point, e.side, g)
                                                                 : forb_side_corner(e.side, e.point, g);
    bool merged = false;
    for (auto& grp : groups) {
      if (std::fabs(grp.normal.x - n.x) <= 1e-9 && std::fabs(grp.normal.y - n.y) <= 1e-9 &&
          std::fabs(grp.offset - off) <= tol) {
        grp.cone.zone = grp.cone.zone.unite(z);
        grp.cone.sources.push_back(e.source);
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({n, off, Cone{z, {e.source}}});
  }

  ConeDecomposition out;
  for (auto& grp : groups) {
    if (!grp.cone.zone.empty()) out.cones.push_back(std::move(grp.cone));
  }
  if (out.cones.size() > 3) throw std::logic_error("cone decomposition produced more than three cones");
  return out;
}

}  // namespace detail

/// Forb(Bᵗ, W) as at most three cones (or the whole circle in Case 0).
[[nodiscard]] inline ConeDecomposition cones_box_wall(const Rect& bt, const Segment2& W, const LinkGeom& g) {
  ConeDecomposition out;
  if (sep_segment_rect(W, bt) <= g.tau) {
    out.whole_circle = true;
    return out;
  }
  const auto verts = bt.vertices();
  const auto sides = bt.sides();
  std::vector<detail::CandidateEdge> edges;
  std::vector<Point2> hull;
  for (int k = 0; k < 4; ++k) {
    hull.push_back(W.a - verts[k]);
    hull.push_back(W.b - verts[k]);
    edges.push_back({{W.a - verts[k], W.b - verts[k]},
                     {ConeSource::Kind::VertexWall, k, -1},
                     W,
                     verts[k]});
  }
  if (!W.degenerate()) {
    for (int k = 0; k < 4; ++k) {
      const std::array<Point2, 2> ends{W.a, W.b};
      for (int j = 0; j < 2; ++j) {
        edges.push_back({{ends[j] - sides[k].a, ends[j] - sides[k].b},
                         {ConeSource::Kind::SideCorner, k, j},
                         sides[k],
                         ends[j]});
      }
    }
  }
  if (bt.x1 - bt.x0 <= 0.0 && bt.y1 - bt.y0 <= 0.0) {
    // point box: the whole answer is the vertex/wall zone
    out.cones.push_back({forb_vertex_wall(verts[0], W, g), {{ConeSource::Kind::VertexWall, 0, -1}}});
    if (out.cones.back().zone.empty()) out.cones.clear();
    return out;
  }
  return detail::cones_from_edges(edges, hull, g);
}

/// Forb(Bᵗ, C) for a corner as at most two side/corner cones.
[[nodiscard]] inline ConeDecomposition cones_box_corner(const Rect& bt, Point2 C, const LinkGeom& g) {
  ConeDecomposition out;
  if (sep_point_rect(C, bt) <= g.tau) {
    out.whole_circle = true;
    return out;
  }
  if (bt.x1 - bt.x0 <= 0.0 && bt.y1 - bt.y0 <= 0.0) {
    auto z = forb_point_point(bt.vertices()[0], C, g);
    if (!z.empty()) out.cones.push_back({z, {{ConeSource::Kind::VertexWall, 0, 0}}});
    return out;
  }
  const auto sides = bt.sides();
  std::vector<detail::CandidateEdge> edges;
  std::vector<Point2> hull;
  for (const auto& v : bt.vertices()) hull.push_back(C - v);
  for (int k = 0; k < 4; ++k) {
    edges.push_back({{C - sides[k].a, C - sides[k].b}, {ConeSource::Kind::SideCorner, k, 0}, sides[k], C});
  }
  return detail::cones_from_edges(edges, hull, g);
}

[[nodiscard]] inline AngularSet forb_box_wall(const Rect& bt, const Segment2& W, const LinkGeom& g) {
  return cones_box_wall(bt, W, g).zone();
}

[[nodiscard]] inline AngularSet forb_box_corner(const Rect& bt, Point2 C, const LinkGeom& g) {
  return cones_box_corner(bt, C, g).zone();
}

[[nodiscard]] inline AngularSet forb_box_feature(const Rect& bt, const Feature& f, const LinkGeom& g) {
  return f.is_corner() ? forb_box_corner(bt, f.corner, g) : forb_box_wall(bt, f.wall, g);
}

}  // namespace sss
