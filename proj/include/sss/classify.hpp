#pragma once
/**
 * @file classify.hpp
 * @brief Feature sets φ(Bᵗ) and the soft box predicate FREE / STUCK / MIXED.
 *
 * FREE is decided exactly from the forbidden zones: if neither link's zone
 * meets its angle range and the joint region lies outside the obstacles,
 * every configuration of the closed box has positive clearance. STUCK uses a
 * sampled sufficient test along each link (see `stuck_along_link`).
 */

#include "sss/cspace.hpp"
#include "sss/environment.hpp"
#include "sss/forbidden.hpp"

#include <vector>

namespace sss {

/// Indices into Environment::features().
struct FeatureSet {
  std::vector<int> ids;

  [[nodiscard]] bool empty() const noexcept { return ids.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return ids.size(); }

  [[nodiscard]] static FeatureSet all(const Environment& env) {
    FeatureSet s;
    s.ids.resize(env.features().size());
    for (std::size_t i = 0; i < s.ids.size(); ++i) s.ids[i] = static_cast<int>(i);
    return s;
  }
};

/// Reach of anything attached to a base point in bt.
[[nodiscard]] inline double feature_radius(const Rect& bt, const RobotSpec& r) noexcept {
  return bt.radius() + r.max_ell() + r.tau;
}

/// Members of `parent` within reach of bt: Sep(m(bt), f) ≤ radius(bt) + max ℓ + τ.
[[nodiscard]] inline FeatureSet feature_set(const Rect& bt, const FeatureSet& parent, const Environment& env,
                                            const RobotSpec& r) {
  const Point2 m = bt.center();
  const double reach = feature_radius(bt, r);
  FeatureSet out;
  for (int id : parent.ids) {
    if (sep_point_feature(m, env.features()[id]) <= reach) out.ids.push_back(id);
  }
  return out;
}

/// Forbidden angles of each link over all bases in bt.
struct BoxZones {
  AngularSet z1;
  AngularSet z2;
};

[[nodiscard]] inline BoxZones box_zones(const Rect& bt, const FeatureSet& phi, const Environment& env,
                                        const RobotSpec& r) {
  BoxZones z;
  const LinkGeom g1 = r.link(1), g2 = r.link(2);
  const Point2 m = bt.center();
  for (int id : phi.ids) {
    const Feature& f = env.features()[id];
    const double s = sep_point_feature(m, f);
    if (!z.z1.is_full() && s <= bt.radius() + g1.ell + g1.tau) z.z1 = z.z1.unite(forb_box_feature(bt, f, g1));
    if (!z.z2.is_full() && s <= bt.radius() + g2.ell + g2.tau) z.z2 = z.z2.unite(forb_box_feature(bt, f, g2));
  }
  return z;
}

namespace detail {

/**
 * Upper bound on "every point within ρ of q is within τ of the obstacles".
 * Features outside φ are known to be farther than `far` from q, which bounds
 * the penetration depth from above.
 */
[[nodiscard]] inline bool disc_always_hits(Point2 q, double rho, double tau, const FeatureSet& phi,
                                           const Environment& env, double far) {
  if (env.point_in_obstacle(q)) {
    const double need = rho - tau;  // depth must exceed this
    if (need < 0.0) return true;
    if (far <= need) return false;
    for (int id : phi.ids) {
      if (sep_point_feature(q, env.features()[id]) <= need) return false;
    }
    return true;
  }
  const double need = tau - rho;  // distance must be below this
  if (need <= 0.0) return false;
  for (int id : phi.ids) {
    if (sep_point_feature(q, env.features()[id]) < need) return true;
  }
  return false;
}

}  // namespace detail

/**
 * Sufficient STUCK test for link i: some point at distance λ along the link
 * collides for every base in bt and every θ in the range. The points
 * b + λu(θ) lie within ρ = r + λ·w/2 of m + λu(θ_mid).
 */
[[nodiscard]] inline bool stuck_along_link(const Rect& bt, const AngRange& range, const LinkGeom& g,
                                           const FeatureSet& phi, const Environment& env, const RobotSpec& r) {
  const Point2 m = bt.center();
  const double rad = bt.radius();
  const double w = range.width();
  const double step = std::min(g.ell / 8.0, std::max(rad, g.ell / 256.0));
  const double far0 = feature_radius(bt, r) - rad;  // from m, minus the box radius
  const Point2 u = unit_vector(range.mid());
  const int n = static_cast<int>(std::ceil(g.ell / step));
  for (int k = 0; k <= n; ++k) {
    const double lambda = std::min(g.ell, k * step);
    const double rho = rad + lambda * 0.5 * w;
    const Point2 q = m + lambda * u;
    if (detail::disc_always_hits(q, rho, g.tau, phi, env, far0 + rad - lambda)) return true;
  }
  return false;
}

/// Classification with precomputed zones for bt (shared by boxes with the same bt).
[[nodiscard]] inline Status classify_with_zones(const XBox& b, const BoxZones& z, const FeatureSet& phi,
                                                const Environment& env, const RobotSpec& r) {
  const Point2 m = b.bt.center();
  const bool mid_inside = env.point_in_obstacle(m);
  const AngularSet w1 = AngularSet::from_pieces({{b.br.t1.lo, b.br.t1.hi}});
  const AngularSet w2 = AngularSet::from_pieces({{b.br.t2.lo, b.br.t2.hi}});
  const bool clear1 = z.z1.intersect(w1).empty();
  const bool clear2 = z.z2.intersect(w2).empty();
  if (!mid_inside && clear1 && clear2) return Status::FREE;
  // the joint region cannot cross ∂Ω without a full zone
  if (mid_inside && !z.z1.is_full() && !z.z2.is_full()) return Status::STUCK;
  if (mid_inside && phi.empty()) return Status::STUCK;
  if (stuck_along_link(b.bt, b.br.t1, r.link(1), phi, env, r)) return Status::STUCK;
  if (stuck_along_link(b.bt, b.br.t2, r.link(2), phi, env, r)) return Status::STUCK;
  return Status::MIXED;
}

[[nodiscard]] inline Status classify(const XBox& b, const FeatureSet& phi, const Environment& env,
                                     const RobotSpec& r) {
  return classify_with_zones(b, box_zones(b.bt, phi, env, r), phi, env, r);
}

}  // namespace sss
