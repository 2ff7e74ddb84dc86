#pragma once
/**
 * @file geometry.hpp
 * @brief Planar and circle primitives: angles, angular sets, points,
 *        segments, rectangles, separations and thick-link clearance.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace sss {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Working tolerance for angle comparisons and interval merging.
inline constexpr double kAngleEps = 1e-12;

// ---------------------------------------------------------------------------
// Angles
// ---------------------------------------------------------------------------

/// Wrap an angle into [0, 2π).
[[nodiscard]] inline double normalize_angle(double a) noexcept {
  if (a >= 0.0 && a < kTwoPi) return a;
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Riemannian metric on S¹: min(|a-b|, 2π-|a-b|), always in [0, π].
[[nodiscard]] inline double angle_dist(double a, double b) noexcept {
  const double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

/// Signed shortest rotation taking `from` to `to`, in (-π, π].
[[nodiscard]] inline double angle_delta(double from, double to) noexcept {
  double d = normalize_angle(to) - normalize_angle(from);
  if (d > kPi) d -= kTwoPi;
  if (d <= -kPi) d += kTwoPi;
  return d;
}

/**
 * Closed arc of S¹ under the wrap convention: [s,t] is {s ≤ θ ≤ t} when
 * s ≤ t and [s,2π] ∪ [0,t] otherwise. `full` marks the whole circle, which
 * cannot be told apart from a singleton once endpoints are normalized.
 */
struct AngularInterval {
  double s = 0.0;
  double t = 0.0;
  bool full = false;

  /// Build from raw endpoints; [0,2π] is S¹ and [2π,0] collapses to {0}.
  [[nodiscard]] static AngularInterval make(double s, double t) {
    if (s == 0.0 && t == kTwoPi) return circle();
    if (t - s >= kTwoPi) return circle();
    return {normalize_angle(s), normalize_angle(t), false};
  }
  [[nodiscard]] static AngularInterval circle() { return {0.0, 0.0, true}; }

  [[nodiscard]] bool wraps() const noexcept { return !full && s > t; }

  [[nodiscard]] double measure() const noexcept {
    if (full) return kTwoPi;
    return s <= t ? t - s : kTwoPi - s + t;
  }

  [[nodiscard]] bool contains(double theta) const noexcept {
    if (full) return true;
    const double a = normalize_angle(theta);
    if (s <= t) return s <= a && a <= t;
    return a >= s || a <= t;
  }

  friend bool operator==(const AngularInterval&, const AngularInterval&) = default;
};

/// Membership of θ in I under the wrap convention.
[[nodiscard]] inline bool interval_contains(const AngularInterval& I, double theta) noexcept {
  return I.contains(theta);
}

/**
 * Closed subset of S¹ stored as sorted, disjoint, non-wrapping pieces
 * [lo, hi] ⊆ [0, 2π]. A wrapping arc is held as two pieces touching 0 and
 * 2π; `intervals()` glues them back together. Pieces closer than
 * kAngleEps are merged.
 */
class AngularSet {
 public:
  struct Piece {
    double lo;
    double hi;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  AngularSet() = default;
  explicit AngularSet(const AngularInterval& I) { add(I); normalize(); }

  [[nodiscard]] static AngularSet circle() { return AngularSet(AngularInterval::circle()); }

  [[nodiscard]] static AngularSet from_pieces(std::vector<Piece> pieces) {
    AngularSet out;
    out.pieces_ = std::move(pieces);
    out.normalize();
    return out;
  }

  [[nodiscard]] bool empty() const noexcept { return pieces_.empty(); }
  [[nodiscard]] bool is_full() const noexcept {
    return pieces_.size() == 1 && pieces_[0].lo <= 0.0 && pieces_[0].hi >= kTwoPi;
  }
  [[nodiscard]] const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  [[nodiscard]] double measure() const noexcept {
    double m = 0.0;
    for (const auto& p : pieces_) m += p.hi - p.lo;
    return m;
  }

  [[nodiscard]] bool contains(double theta) const noexcept {
    const double a = normalize_angle(theta);
    for (const auto& p : pieces_) {
      if (p.lo <= a && a <= p.hi) return true;
    }
    // 2π is the same point as 0
    return a == 0.0 && !pieces_.empty() && pieces_.back().hi >= kTwoPi;
  }

  /// Maximal arcs, with the piece pair straddling 0 ≡ 2π glued together.
  [[nodiscard]] std::vector<AngularInterval> intervals() const {
    std::vector<AngularInterval> out;
    if (pieces_.empty()) return out;
    if (is_full()) return {AngularInterval::circle()};
    const bool wrap = pieces_.size() >= 2 && pieces_.front().lo <= 0.0 && pieces_.back().hi >= kTwoPi;
    const std::size_t first = wrap ? 1 : 0;
    const std::size_t last = wrap ? pieces_.size() - 1 : pieces_.size();
    for (std::size_t i = first; i < last; ++i) {
      out.push_back(AngularInterval::make(pieces_[i].lo, pieces_[i].hi));
    }
    if (wrap) {
      out.push_back(AngularInterval{normalize_angle(pieces_.back().lo), pieces_.front().hi, false});
    }
    return out;
  }

  [[nodiscard]] AngularSet unite(const AngularSet& o) const {
    AngularSet out;
    out.pieces_ = pieces_;
    out.pieces_.insert(out.pieces_.end(), o.pieces_.begin(), o.pieces_.end());
    out.normalize();
    return out;
  }

  [[nodiscard]] AngularSet intersect(const AngularSet& o) const {
    AngularSet out;
    std::size_t i = 0, j = 0;
    while (i < pieces_.size() && j < o.pieces_.size()) {
      const double lo = std::max(pieces_[i].lo, o.pieces_[j].lo);
      const double hi = std::min(pieces_[i].hi, o.pieces_[j].hi);
      if (lo <= hi) out.pieces_.push_back({lo, hi});
      if (pieces_[i].hi < o.pieces_[j].hi) ++i; else ++j;
    }
    // touching at the seam 0 ≡ 2π
    if (contains(0.0) && o.contains(0.0) && !out.contains(0.0)) out.pieces_.push_back({0.0, 0.0});
    out.normalize();
    return out;
  }

  /// Closure of the complement.
  [[nodiscard]] AngularSet complement() const {
    if (pieces_.empty()) return circle();
    AngularSet out;
    double cur = 0.0;
    for (const auto& p : pieces_) {
      if (p.lo > cur) out.pieces_.push_back({cur, p.lo});
      cur = std::max(cur, p.hi);
    }
    if (cur < kTwoPi) out.pieces_.push_back({cur, kTwoPi});
    out.normalize();
    return out;
  }

  /// Rotate every arc by `delta`.
  [[nodiscard]] AngularSet shifted(double delta) const {
    if (is_full()) return *this;
    AngularSet out;
    for (const auto& I : intervals()) {
      out.add(AngularInterval{normalize_angle(I.s + delta), normalize_angle(I.t + delta), false});
    }
    out.normalize();
    return out;
  }

  /// Outward widening of every arc by `w` on both sides.
  [[nodiscard]] AngularSet widened(double w) const {
    if (is_full() || empty()) return *this;
    AngularSet out;
    for (const auto& I : intervals()) {
      if (I.measure() + 2.0 * w >= kTwoPi) return circle();
      out.add(AngularInterval{normalize_angle(I.s - w), normalize_angle(I.t + w), false});
    }
    out.normalize();
    return out;
  }

  /// True when every point of this set lies in `o` (up to `tol` at arc ends).
  [[nodiscard]] bool subset_of(const AngularSet& o, double tol = 0.0) const {
    const AngularSet big = tol > 0.0 ? o.widened(tol) : o;
    for (const auto& p : pieces_) {
      bool inside = false;
      for (const auto& q : big.pieces_) {
        if (q.lo <= p.lo && p.hi <= q.hi) { inside = true; break; }
      }
      if (!inside) return false;
    }
    return true;
  }

  friend bool operator==(const AngularSet&, const AngularSet&) = default;

 private:
  void add(const AngularInterval& I) {
    if (I.full) { pieces_.push_back({0.0, kTwoPi}); return; }
    if (I.s <= I.t) {
      pieces_.push_back({I.s, I.t});
    } else {
      pieces_.push_back({I.s, kTwoPi});
      pieces_.push_back({0.0, I.t});
    }
  }

  void normalize() {
    for (auto& p : pieces_) {
      p.lo = std::clamp(p.lo, 0.0, kTwoPi);
      p.hi = std::clamp(p.hi, 0.0, kTwoPi);
    }
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Piece> merged;
    for (const auto& p : pieces_) {
      if (!merged.empty() && p.lo <= merged.back().hi + kAngleEps) {
        merged.back().hi = std::max(merged.back().hi, p.hi);
      } else {
        merged.push_back(p);
      }
    }
    if (!merged.empty() && merged.front().lo <= kAngleEps) merged.front().lo = 0.0;
    if (!merged.empty() && merged.back().hi >= kTwoPi - kAngleEps) merged.back().hi = kTwoPi;
    pieces_ = std::move(merged);
  }

  std::vector<Piece> pieces_;
};

[[nodiscard]] inline AngularSet set_union(const AngularSet& a, const AngularSet& b) { return a.unite(b); }
[[nodiscard]] inline AngularSet set_intersect(const AngularSet& a, const AngularSet& b) { return a.intersect(b); }
[[nodiscard]] inline AngularSet set_complement(const AngularSet& a) { return a.complement(); }

// ---------------------------------------------------------------------------
// Plane
// ---------------------------------------------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(Point2 a) noexcept { return {-a.x, -a.y}; }
  friend Point2 operator*(double k, Point2 a) noexcept { return {k * a.x, k * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

[[nodiscard]] inline double dot(Point2 a, Point2 b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] inline double cross(Point2 a, Point2 b) noexcept { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Point2 a) noexcept { return std::hypot(a.x, a.y); }
[[nodiscard]] inline double dist(Point2 a, Point2 b) noexcept { return norm(a - b); }
[[nodiscard]] inline Point2 unit_vector(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }

struct Segment2 {
  Point2 a;
  Point2 b;

  [[nodiscard]] double length() const noexcept { return dist(a, b); }
  [[nodiscard]] bool degenerate() const noexcept { return length() <= 1e-12; }
  [[nodiscard]] Point2 midpoint() const noexcept { return 0.5 * (a + b); }
  friend bool operator==(const Segment2&, const Segment2&) = default;
};

/// Axis-aligned rectangle [x0,x1] × [y0,y1]; may be degenerate.
struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  [[nodiscard]] double width() const noexcept { return std::max(x1 - x0, y1 - y0); }
  [[nodiscard]] double radius() const noexcept { return 0.5 * std::hypot(x1 - x0, y1 - y0); }
  [[nodiscard]] Point2 center() const noexcept { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  [[nodiscard]] bool contains(Point2 p) const noexcept {
    return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
  }
  /// Corners counter-clockwise from (x0,y0).
  [[nodiscard]] std::array<Point2, 4> vertices() const noexcept {
    return {Point2{x0, y0}, Point2{x1, y0}, Point2{x1, y1}, Point2{x0, y1}};
  }
  /// Sides counter-clockwise: bottom, right, top, left.
  [[nodiscard]] std::array<Segment2, 4> sides() const noexcept {
    const auto v = vertices();
    return {Segment2{v[0], v[1]}, Segment2{v[1], v[2]}, Segment2{v[2], v[3]}, Segment2{v[3], v[0]}};
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Euclidean distance from p to the closed segment s.
[[nodiscard]] inline double sep_point_segment(Point2 p, const Segment2& s) noexcept {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 <= 0.0) return dist(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

/// Closest point of the closed segment s to p.
[[nodiscard]] inline Point2 closest_point_on_segment(Point2 p, const Segment2& s) noexcept {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 <= 0.0) return s.a;
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return s.a + t * d;
}

[[nodiscard]] inline bool segments_intersect(const Segment2& s, const Segment2& t) noexcept {
  const double d1 = cross(s.b - s.a, t.a - s.a);
  const double d2 = cross(s.b - s.a, t.b - s.a);
  const double d3 = cross(t.b - t.a, s.a - t.a);
  const double d4 = cross(t.b - t.a, s.b - t.a);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  auto on = [](const Segment2& seg, Point2 p, double c) {
    return c == 0.0 && std::min(seg.a.x, seg.b.x) <= p.x && p.x <= std::max(seg.a.x, seg.b.x) &&
           std::min(seg.a.y, seg.b.y) <= p.y && p.y <= std::max(seg.a.y, seg.b.y);
  };
  return on(s, t.a, d1) || on(s, t.b, d2) || on(t, s.a, d3) || on(t, s.b, d4);
}

/// Separation of two closed segments.
[[nodiscard]] inline double sep_segment_segment(const Segment2& s, const Segment2& t) noexcept {
  if (segments_intersect(s, t)) return 0.0;
  return std::min(std::min(sep_point_segment(s.a, t), sep_point_segment(s.b, t)),
                  std::min(sep_point_segment(t.a, s), sep_point_segment(t.b, s)));
}

/// Separation between a closed segment and a closed rectangle.
[[nodiscard]] inline double sep_segment_rect(const Segment2& s, const Rect& r) noexcept {
  if (r.contains(s.a) || r.contains(s.b)) return 0.0;
  double best = sep_segment_segment(s, r.sides()[0]);
  for (int i = 1; i < 4; ++i) best = std::min(best, sep_segment_segment(s, r.sides()[i]));
  return best;
}

[[nodiscard]] inline double sep_point_rect(Point2 p, const Rect& r) noexcept {
  const double dx = std::max({r.x0 - p.x, 0.0, p.x - r.x1});
  const double dy = std::max({r.y0 - p.y, 0.0, p.y - r.y1});
  return std::hypot(dx, dy);
}

// ---------------------------------------------------------------------------
// Links and features
// ---------------------------------------------------------------------------

/// A single link of length ell > 0 and thickness tau ≥ 0.
struct LinkGeom {
  double ell = 1.0;
  double tau = 0.0;
};

enum class FeatureKind { Corner, Wall };

/**
 * Boundary feature of the obstacle set. A wall is the open edge between two
 * corners; the obstacle interior lies on its left (polygons are stored
 * counter-clockwise). Queries treat walls as closed segments, which only
 * enlarges the forbidden sets they produce.
 */
struct Feature {
  FeatureKind kind = FeatureKind::Corner;
  Point2 corner;   // valid for corners
  Segment2 wall;   // valid for walls
  int id = -1;
  int polygon = -1;

  [[nodiscard]] static Feature make_corner(Point2 p, int id = -1, int polygon = -1) {
    return {FeatureKind::Corner, p, {p, p}, id, polygon};
  }
  /// Zero-length walls are demoted to corners.
  [[nodiscard]] static Feature make_wall(Segment2 s, int id = -1, int polygon = -1) {
    if (s.degenerate()) return make_corner(s.a, id, polygon);
    return {FeatureKind::Wall, s.a, s, id, polygon};
  }
  [[nodiscard]] bool is_corner() const noexcept { return kind == FeatureKind::Corner; }
};

[[nodiscard]] inline double sep_point_feature(Point2 p, const Feature& f) noexcept {
  return f.is_corner() ? dist(p, f.corner) : sep_point_segment(p, f.wall);
}

[[nodiscard]] inline double sep_segment_feature(const Segment2& s, const Feature& f) noexcept {
  return f.is_corner() ? sep_point_segment(f.corner, s) : sep_segment_segment(s, f.wall);
}

[[nodiscard]] inline double sep_rect_feature(const Rect& r, const Feature& f) noexcept {
  return f.is_corner() ? sep_point_rect(f.corner, r) : sep_segment_rect(f.wall, r);
}

/// Thin link segment from `base` at angle θ.
[[nodiscard]] inline Segment2 link_segment(Point2 base, double theta, double ell) noexcept {
  return {base, base + ell * unit_vector(theta)};
}

/**
 * Sep(thin link, f) - τ. Negative means the thick link overlaps f, zero means
 * it touches.
 */
[[nodiscard]] inline double link_clearance(Point2 base, double theta, const LinkGeom& g, const Feature& f) noexcept {
  return sep_segment_feature(link_segment(base, theta, g.ell), f) - g.tau;
}

}  // namespace sss
