#pragma once
/**
 * @file cspace.hpp
 * @brief Configuration space ℝ² × 𝕋 of the 2-link robot, the non-crossing
 *        subspace, X-boxes and their splits and adjacency.
 *
 * A configuration (x, y, θ₁, θ₂) places the joint A₀ at (x, y); link i runs
 * from A₀ to Aᵢ = A₀ + ℓᵢ(cos θᵢ, sin θᵢ). With κ ≥ 0 the band
 * Δ(κ) = {d(θ₁,θ₂) ≤ κ} is removed, splitting the torus into the two open
 * strips 𝕋_< (LT) and 𝕋_> (GT). Within a non-wrapping rotational box
 * [a,b] × [a',b'] ⊆ [0,2π]² these are
 *
 *     LT:  κ < θ₂ - θ₁ < 2π - κ
 *     GT:  κ < θ₁ - θ₂ < 2π - κ
 *
 * evaluated on the box's own coordinates, so the angle 0 ≡ 2π reads as 2π in
 * a box whose range ends at 2π. With κ < 0 the robot may self-cross and all
 * boxes carry the FULL tag.
 */

#include "sss/geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sss {

struct RobotSpec {
  double ell1 = 1.0;
  double ell2 = 1.0;
  double tau = 0.0;
  double kappa = -1.0;  // radians; negative means self-crossing allowed

  /// Throws std::invalid_argument if the parameters are unusable.
  void validate() const {
    if (!(ell1 > 0.0) || !(ell2 > 0.0)) throw std::invalid_argument("link lengths must be positive");
    if (!(tau >= 0.0)) throw std::invalid_argument("thickness must be non-negative");
    if (!(kappa < kPi)) throw std::invalid_argument("kappa must be below pi (the band would cover the torus)");
  }
  [[nodiscard]] bool non_crossing() const noexcept { return kappa >= 0.0; }
  [[nodiscard]] LinkGeom link(int i) const noexcept { return {i == 1 ? ell1 : ell2, tau}; }
  [[nodiscard]] double max_ell() const noexcept { return std::max(ell1, ell2); }
};

struct Config {
  double x = 0.0;
  double y = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  [[nodiscard]] Point2 base() const noexcept { return {x, y}; }
  [[nodiscard]] Config normalized() const noexcept { return {x, y, normalize_angle(theta1), normalize_angle(theta2)}; }
  friend bool operator==(const Config&, const Config&) = default;
};

struct Footprints {
  Point2 a0, a1, a2;
};

[[nodiscard]] inline Footprints footprints(const Config& c, const RobotSpec& r) noexcept {
  const Point2 a0 = c.base();
  return {a0, a0 + r.ell1 * unit_vector(c.theta1), a0 + r.ell2 * unit_vector(c.theta2)};
}

/// Membership in the closed band Δ(κ); always false for κ < 0.
[[nodiscard]] inline bool in_band(double theta1, double theta2, double kappa) noexcept {
  if (kappa < 0.0) return false;
  return angle_dist(theta1, theta2) <= kappa;
}

// ---------------------------------------------------------------------------
// Rotational boxes
// ---------------------------------------------------------------------------

enum class Tag { LT, GT, FULL };

[[nodiscard]] inline const char* to_string(Tag t) noexcept {
  switch (t) {
    case Tag::LT: return "LT";
    case Tag::GT: return "GT";
    default: return "FULL";
  }
}

/// Closed non-wrapping angle range [lo, hi] ⊆ [0, 2π].
struct AngRange {
  double lo = 0.0;
  double hi = kTwoPi;

  [[nodiscard]] double width() const noexcept { return hi - lo; }
  [[nodiscard]] double mid() const noexcept { return 0.5 * (lo + hi); }
  [[nodiscard]] bool valid() const noexcept { return 0.0 <= lo && lo <= hi && hi <= kTwoPi; }

  /// Coordinate of θ inside this range (2π stands for 0 when the range ends there).
  [[nodiscard]] std::optional<double> coord(double theta) const noexcept {
    const double a = normalize_angle(theta);
    if (lo <= a && a <= hi) return a;
    if (a == 0.0 && hi >= kTwoPi) return kTwoPi;
    return std::nullopt;
  }
  friend bool operator==(const AngRange&, const AngRange&) = default;
};

struct RotBox {
  AngRange t1;
  AngRange t2;
  friend bool operator==(const RotBox&, const RotBox&) = default;
};

/// Whether (θ₁, θ₂), given in box coordinates, lies in the open strip for `tag`.
[[nodiscard]] inline bool in_strip(double th1, double th2, double kappa, Tag tag) noexcept {
  switch (tag) {
    case Tag::LT: return kappa < th2 - th1 && th2 - th1 < kTwoPi - kappa;
    case Tag::GT: return kappa < th1 - th2 && th1 - th2 < kTwoPi - kappa;
    default: return true;
  }
}

/**
 * True iff no point of the closed box br lies in the strip for `tag`.
 * Throws std::invalid_argument on a wrapping or out-of-range box.
 */
[[nodiscard]] inline bool is_box_empty(const RotBox& br, double kappa, Tag tag) {
  if (!br.t1.valid() || !br.t2.valid()) throw std::invalid_argument("is_box_empty: wrapping rotational box");
  const double a = br.t1.lo, b = br.t1.hi, ap = br.t2.lo, bp = br.t2.hi;
  switch (tag) {
    case Tag::LT: return kappa >= bp - a || kTwoPi - kappa <= ap - b;
    case Tag::GT: return kappa >= b - ap || kTwoPi - kappa <= a - bp;
    default: return false;
  }
}

/**
 * A point of br strictly inside the strip for `tag`, in box coordinates.
 * The difference θ₂-θ₁ (or θ₁-θ₂) is centred in its admissible range.
 */
[[nodiscard]] inline std::pair<double, double> representative(const RotBox& br, double kappa, Tag tag) {
  if (tag == Tag::FULL) return {br.t1.mid(), br.t2.mid()};
  const double k = std::max(kappa, 0.0);
  if (tag == Tag::LT) {
    const double lo = std::max(br.t2.lo - br.t1.hi, k);
    const double hi = std::min(br.t2.hi - br.t1.lo, kTwoPi - k);
    const double d = 0.5 * (lo + hi);
    const double t1 = 0.5 * (std::max(br.t1.lo, br.t2.lo - d) + std::min(br.t1.hi, br.t2.hi - d));
    return {t1, t1 + d};
  }
  const double lo = std::max(br.t1.lo - br.t2.hi, k);
  const double hi = std::min(br.t1.hi - br.t2.lo, kTwoPi - k);
  const double d = 0.5 * (lo + hi);
  const double t2 = 0.5 * (std::max(br.t2.lo, br.t1.lo - d) + std::min(br.t2.hi, br.t1.hi - d));
  return {t2 + d, t2};
}

// ---------------------------------------------------------------------------
// X-boxes
// ---------------------------------------------------------------------------

enum class Status { UNKNOWN, FREE, STUCK, MIXED, SMALL };

[[nodiscard]] inline const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::FREE: return "FREE";
    case Status::STUCK: return "STUCK";
    case Status::MIXED: return "MIXED";
    case Status::SMALL: return "SMALL";
    default: return "UNKNOWN";
  }
}

/// Bᵗ × (Bʳ ∩ strip(tag)), plus the bookkeeping the planner needs.
struct XBox {
  Rect bt;
  RotBox br;
  Tag tag = Tag::FULL;
  Status status = Status::UNKNOWN;
  bool rot_split = false;  // produced by the T/R split; never split again
  int id = -1;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;

  [[nodiscard]] bool is_leaf() const noexcept { return children.empty(); }

  /// Membership of a configuration in the closed box intersected with the open strip.
  [[nodiscard]] bool contains(const Config& c, double kappa) const noexcept {
    if (!bt.contains(c.base())) return false;
    const auto t1 = br.t1.coord(c.theta1);
    const auto t2 = br.t2.coord(c.theta2);
    if (!t1 || !t2) return false;
    if (tag == Tag::FULL) return true;
    if (in_strip(*t1, *t2, kappa, tag)) return true;
    // 0 ≡ 2π may be read at either end of a full-width range
    const double alt1 = *t1 == 0.0 && br.t1.hi >= kTwoPi ? kTwoPi : *t1;
    const double alt2 = *t2 == 0.0 && br.t2.hi >= kTwoPi ? kTwoPi : *t2;
    return in_strip(alt1, alt2, kappa, tag);
  }

  /// Interior configuration: centre of Bᵗ with the strip representative angles.
  [[nodiscard]] Config center(double kappa) const {
    const auto [t1, t2] = representative(br, kappa, tag);
    const Point2 m = bt.center();
    return Config{m.x, m.y, t1, t2}.normalized();
  }
};

/// Rotational parts of the initial split of 𝕋 at (0,0): four quadrants, tagged.
[[nodiscard]] inline std::vector<std::pair<RotBox, Tag>> initial_torus_split(double kappa) {
  const AngRange lo{0.0, kPi}, hi{kPi, kTwoPi};
  const std::array<RotBox, 4> quads{RotBox{lo, lo}, RotBox{hi, lo}, RotBox{lo, hi}, RotBox{hi, hi}};
  std::vector<std::pair<RotBox, Tag>> out;
  for (const auto& q : quads) {
    if (kappa < 0.0) {
      out.emplace_back(q, Tag::FULL);
      continue;
    }
    for (Tag t : {Tag::LT, Tag::GT}) {
      if (!is_box_empty(q, kappa, t)) out.emplace_back(q, t);
    }
  }
  return out;
}

/// Quadtree split of Bᵗ in the order SW, SE, NW, NE; Bʳ and tag are inherited.
[[nodiscard]] inline std::array<XBox, 4> split_translational(const XBox& b) {
  const double xm = 0.5 * (b.bt.x0 + b.bt.x1);
  const double ym = 0.5 * (b.bt.y0 + b.bt.y1);
  const std::array<Rect, 4> rects{Rect{b.bt.x0, b.bt.y0, xm, ym}, Rect{xm, b.bt.y0, b.bt.x1, ym},
                                  Rect{b.bt.x0, ym, xm, b.bt.y1}, Rect{xm, ym, b.bt.x1, b.bt.y1}};
  std::array<XBox, 4> out;
  for (int k = 0; k < 4; ++k) {
    out[k].bt = rects[k];
    out[k].br = b.br;
    out[k].tag = b.tag;
    out[k].parent = b.id;
    out[k].depth = b.depth + 1;
  }
  return out;
}

/// Maximal sub-ranges of `range` that avoid `zones` (positive length only).
[[nodiscard]] inline std::vector<AngRange> free_ranges(const AngRange& range, const AngularSet& zones) {
  const AngularSet window = AngularSet::from_pieces({{range.lo, range.hi}});
  const AngularSet free = zones.complement().intersect(window);
  std::vector<AngRange> out;
  for (const auto& p : free.pieces()) {
    // step off the zone boundaries so the closed children miss the closed zones
    const double lo = p.lo > range.lo ? p.lo + kAngleEps : range.lo;
    const double hi = p.hi < range.hi ? p.hi - kAngleEps : range.hi;
    if (hi - lo > kAngleEps) out.push_back({lo, hi});
  }
  return out;
}

/**
 * The single obstacle-driven split of Bʳ: every product of a free range of
 * link 1 with a free range of link 2, kept in the parent's strip when
 * non-empty there.
 */
[[nodiscard]] inline std::vector<XBox> split_rotational_TR(const XBox& b, const AngularSet& zones1,
                                                          const AngularSet& zones2, double kappa) {
  std::vector<XBox> out;
  const auto f1 = free_ranges(b.br.t1, zones1);
  if (f1.empty()) return out;
  const auto f2 = free_ranges(b.br.t2, zones2);
  for (const auto& r1 : f1) {
    for (const auto& r2 : f2) {
      const RotBox br{r1, r2};
      if (is_box_empty(br, kappa, b.tag)) continue;
      XBox c;
      c.bt = b.bt;
      c.br = br;
      c.tag = b.tag;
      c.rot_split = true;
      c.parent = b.id;
      c.depth = b.depth + 1;
      out.push_back(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjacency
// ---------------------------------------------------------------------------

namespace detail {

[[nodiscard]] inline std::optional<AngRange> overlap(const AngRange& a, const AngRange& b) noexcept {
  const double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (hi - lo > kAngleEps) return AngRange{lo, hi};
  return std::nullopt;
}

[[nodiscard]] inline bool same(double a, double b, double scale) noexcept {
  return std::fabs(a - b) <= 1e-12 * std::max(1.0, scale);
}

/// Open interval of θⱼ admissible when the other angle is fixed at v (box coordinates).
[[nodiscard]] inline std::optional<AngRange> strip_slice(const AngRange& range, double v, int fixed, double kappa,
                                                         Tag tag) {
  if (tag == Tag::FULL) return range;
  // LT with θ₁ fixed or GT with θ₂ fixed: θⱼ ∈ (v+κ, v+2π-κ); otherwise (v-2π+κ, v-κ)
  const bool above = (tag == Tag::LT) == (fixed == 1);
  const AngRange band = above ? AngRange{v + kappa, v + kTwoPi - kappa} : AngRange{v - kTwoPi + kappa, v - kappa};
  return overlap(range, band);
}

}  // namespace detail

/**
 * A configuration on the common face of two X-boxes, strictly inside both
 * strips and in the closure of both boxes; nullopt when they do not share a
 * 3-dimensional face. Faces are either a shared edge of the translational
 * boxes with overlapping rotational parts, or overlapping translational boxes
 * whose ranges abut in one angle. Abutment across 0 ≡ 2π swaps LT and GT.
 */
[[nodiscard]] inline std::optional<Config> face_point(const XBox& a, const XBox& b, double kappa) {
  const Rect& p = a.bt;
  const Rect& q = b.bt;
  const double scale = std::max({std::fabs(p.x0), std::fabs(p.x1), std::fabs(p.y0), std::fabs(p.y1)});
  const double ox0 = std::max(p.x0, q.x0), ox1 = std::min(p.x1, q.x1);
  const double oy0 = std::max(p.y0, q.y0), oy1 = std::min(p.y1, q.y1);
  const double tol = 1e-12 * std::max(1.0, scale);

  // (a) shared translational edge
  const bool share_x = (detail::same(p.x1, q.x0, scale) || detail::same(q.x1, p.x0, scale)) && oy1 - oy0 > tol;
  const bool share_y = (detail::same(p.y1, q.y0, scale) || detail::same(q.y1, p.y0, scale)) && ox1 - ox0 > tol;
  if (share_x || share_y) {
    if (a.tag != b.tag) return std::nullopt;
    const auto r1 = detail::overlap(a.br.t1, b.br.t1);
    const auto r2 = detail::overlap(a.br.t2, b.br.t2);
    if (!r1 || !r2) return std::nullopt;
    const RotBox br{*r1, *r2};
    if (is_box_empty(br, kappa, a.tag)) return std::nullopt;
    const auto [t1, t2] = representative(br, kappa, a.tag);
    const double x = share_x ? (detail::same(p.x1, q.x0, scale) ? p.x1 : p.x0) : 0.5 * (ox0 + ox1);
    const double y = share_y ? (detail::same(p.y1, q.y0, scale) ? p.y1 : p.y0) : 0.5 * (oy0 + oy1);
    return Config{x, y, t1, t2}.normalized();
  }

  // (b) overlapping translational boxes, rotational ranges abutting in one angle
  if (!(ox1 - ox0 > tol && oy1 - oy0 > tol)) return std::nullopt;
  auto make = [&](int fixed, double v, double w) {
    return Config{0.5 * (ox0 + ox1), 0.5 * (oy0 + oy1), fixed == 1 ? v : w, fixed == 1 ? w : v}.normalized();
  };
  for (int fixed = 1; fixed <= 2; ++fixed) {
    const AngRange& ai = fixed == 1 ? a.br.t1 : a.br.t2;
    const AngRange& bi = fixed == 1 ? b.br.t1 : b.br.t2;
    const auto other = detail::overlap(fixed == 1 ? a.br.t2 : a.br.t1, fixed == 1 ? b.br.t2 : b.br.t1);
    if (!other) continue;
    // interior abutment keeps the tag; abutment across 0 ≡ 2π swaps LT and GT
    for (const double v : {ai.hi, ai.lo}) {
      if (v <= 0.0 || v >= kTwoPi || !(v == bi.lo || v == bi.hi) || a.tag != b.tag) continue;
      if (const auto slice = detail::strip_slice(*other, v, fixed, kappa, a.tag)) return make(fixed, v, slice->mid());
    }
    if ((ai.hi >= kTwoPi && bi.lo <= 0.0) || (bi.hi >= kTwoPi && ai.lo <= 0.0)) {
      const bool flipped = (a.tag == Tag::LT && b.tag == Tag::GT) || (a.tag == Tag::GT && b.tag == Tag::LT);
      if (!(flipped || (a.tag == Tag::FULL && b.tag == Tag::FULL))) continue;
      const double k = std::max(kappa, 0.0);
      const auto slice = a.tag == Tag::FULL ? other : detail::overlap(*other, AngRange{k, kTwoPi - k});
      if (slice) return make(fixed, 0.0, slice->mid());
    }
  }
  return std::nullopt;
}

[[nodiscard]] inline bool adjacent(const XBox& a, const XBox& b, double kappa) {
  return face_point(a, b, kappa).has_value();
}

}  // namespace sss
