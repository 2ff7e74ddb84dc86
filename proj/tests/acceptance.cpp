// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "sss/bench.hpp"
#include "sss/classify.hpp"
#include "sss/forbidden.hpp"
#include "sss/report.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace sss;
using namespace sss::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double millis_since(Clock::time_point t0) { return 1000.0 * seconds_since(t0); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// First and last forbidden samples of a single-arc sweep (-1 if none).
std::pair<int, int> arc_ends(const oracle::SweepResult& sw) {
  int first = -1, last = -1;
  for (int k = 0; k < sw.n; ++k) {
    const bool on = sw.samples[k], prev = sw.samples[(k + sw.n - 1) % sw.n], next = sw.samples[(k + 1) % sw.n];
    if (on && !prev) first = k;
    if (on && !next) last = k;
  }
  return {first, last};
}

int forbidden_count(const oracle::SweepResult& sw) {
  int on = 0;
  for (int k = 0; k < sw.n; ++k) on += sw.samples[k];
  return on;
}

// Closest point of W to the thin link, by ternary search on the (convex) distance along W.
Point2 contact_on_wall(Point2 V, double theta, double ell, const Segment2& W) {
  const Segment2 link = link_segment(V, theta, ell);
  double lo = 0.0, hi = 1.0;
  auto at = [&](double t) { return W.a + t * (W.b - W.a); };
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (sep_point_segment(at(m1), link) <= sep_point_segment(at(m2), link)) hi = m2; else lo = m1;
  }
  return at(0.5 * (lo + hi));
}

// ---------------------------------------------------------------------------
// 1. point/point zones
// ---------------------------------------------------------------------------

Verdict point_point() {
  constexpr int kN = 36000;
  std::mt19937_64 rng(1001);
  int bad = 0, regimes[4] = {0, 0, 0, 0};
  double worst = 0.0;
  double tol = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const LinkGeom g{uniform(rng, 0.5, 5), uniform(rng, 0.05, 1.5)};
    const double seam = std::sqrt(g.tau * g.tau + g.ell * g.ell), reach = g.ell + g.tau;
    const int regime = i % 4;
    double d = 0.0;
    switch (regime) {
      case 0: d = uniform(rng, 0.05, 1.0) * g.tau; break;
      case 1: d = uniform(rng, g.tau, seam); break;
      case 2: d = uniform(rng, seam, reach); break;
      default: d = uniform(rng, reach, 1.5 * reach); break;
    }
    if (d <= 0.0) continue;
    ++regimes[regime];
    const Point2 V{uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const Point2 C = V + d * unit_vector(uniform(rng, 0, kTwoPi));
    const AngularSet z = forb_point_point(V, C, g);
    const auto sw = oracle::sweep_forbidden({V}, Feature::make_corner(C), g, kN);
    tol = sw.spacing() + 1e-9;
    const int on = forbidden_count(sw);
    if (on == sw.n || on == 0) {
      // no arc ends to compare: the zone is S¹, ∅, or narrower than a sample
      const bool ok = on == sw.n ? z.is_full() : (z.empty() || z.measure() <= 2 * tol);
      bad += !ok;
      continue;
    }
    const auto iv = z.intervals();
    if (iv.size() != 1 || iv[0].full) {
      ++bad;
      continue;
    }
    const auto [first, last] = arc_ends(sw);
    // the oracle's boundary lies between the last free and the first forbidden sample
    const double es = angle_dist(iv[0].s, sw.angle(first) - 0.5 * sw.spacing()) - 0.5 * sw.spacing();
    const double et = angle_dist(iv[0].t, sw.angle(last) + 0.5 * sw.spacing()) - 0.5 * sw.spacing();
    worst = std::max({worst, es, et});
    if (std::max(es, et) > tol) ++bad;
  }

  // branch seam at d² = τ² + ℓ²
  double seam_worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const LinkGeom g{uniform(rng, 0.1, 10), uniform(rng, 0.01, 5)};
    const double d = std::sqrt(g.tau * g.tau + g.ell * g.ell);
    seam_worst = std::max({seam_worst, std::fabs(correction_angle(d * (1 - 1e-13), g) - correction_angle(d * (1 + 1e-13), g)),
                           std::fabs(std::asin(g.tau / d) - std::acos((g.ell * g.ell + d * d - g.tau * g.tau) / (2 * d * g.ell)))});
  }
  const bool seam_ok = seam_worst <= 1e-9;
  return {bad == 0 && seam_ok,
          fmt("10000 instances (regimes %d/%d/%d/%d), %d endpoint mismatches, worst excess over half a sample %.2e "
              "(tol %.2e); seam jump %.1e",
              regimes[0], regimes[1], regimes[2], regimes[3], bad, worst, tol, seam_worst)};
}

// ---------------------------------------------------------------------------
// 2. stop analysis
// ---------------------------------------------------------------------------

// Which stop case the contact point at an extreme angle shows, in wall-frame abscissa.
int contact_case(double x, double xc_prime, double xc, double tol) {
  if (std::fabs(x - xc_prime) <= tol) return 1;  // at C'
  if (std::fabs(x - xc) <= tol) return 3;        // at C
  return 2;                                      // interior of the wall
}

Verdict stops() {
  constexpr int kN = 36000;
  constexpr double kMargin = 0.05;  // instances this close to a case boundary have two valid tags
  std::mt19937_64 rng(1002);
  int accepted = 0, tag_bad = 0, stop_bad = 0, zone_bad = 0, impossible = 0, generated = 0;
  int combos[3][3] = {};
  double worst_stop = 0.0;
  while (accepted < 10000) {
    const LinkGeom g{uniform(rng, 1, 5), uniform(rng, 0.05, 1.5)};
    const double reach = g.ell + g.tau;
    const double sigma = uniform(rng, g.tau, reach);
    const double xs = x_star(sigma, g);
    double xa = uniform(rng, -xs, xs), xb = uniform(rng, -xs, xs);
    // corners must also clear the inner disc of radius τ
    if (std::hypot(xa, sigma) <= g.tau || std::hypot(xb, sigma) <= g.tau) continue;
    const double rot = uniform(rng, 0, kTwoPi);
    const Point2 V{uniform(rng, -5, 5), uniform(rng, -5, 5)};
    const Point2 ux = unit_vector(rot), uy{-ux.y, ux.x};
    const Point2 O = V + sigma * uy;
    const Segment2 W{O + xa * ux, O + xb * ux};
    StopPair sp;
    try {
      sp = stops_vertex_wall(V, W, g);
    } catch (const std::domain_error&) {
      continue;
    }
    ++generated;
    impossible += !stop_case_possible(sp.left_case, sp.right_case);
    const WallFrame f = make_wall_frame(V, W);
    const double xm = x_max(f.sigma, g);
    bool near_boundary = f.xc - f.xc_prime < 2 * kMargin;
    for (double e : {xm, -xm}) {
      near_boundary = near_boundary || std::fabs(e - f.xc_prime) < kMargin || std::fabs(e - f.xc) < kMargin;
    }
    if (near_boundary) continue;
    ++accepted;
    combos[static_cast<int>(sp.left_case)][static_cast<int>(sp.right_case)]++;

    const auto sw = oracle::sweep_forbidden({V}, Feature::make_wall(W), g, kN);
    zone_bad += sweep_disagreements(forb_vertex_wall(V, W, g), sw) != 0;
    const auto [first, last] = arc_ends(sw);
    if (first < 0) {
      ++stop_bad;
      continue;
    }
    auto frame_x = [&](Point2 p) { return dot(p - f.origin, f.ux); };
    // contact points at the two samples straddling each end of the arc
    const Point2 l_in = contact_on_wall(V, sw.angle(first), g.ell, W);
    const Point2 l_out = contact_on_wall(V, sw.angle(first) - sw.spacing(), g.ell, W);
    const Point2 r_in = contact_on_wall(V, sw.angle(last), g.ell, W);
    const Point2 r_out = contact_on_wall(V, sw.angle(last) + sw.spacing(), g.ell, W);
    const double step = g.ell * sw.spacing();
    const double lt = dist(l_in, l_out) + step + 1e-9, rt = dist(r_in, r_out) + step + 1e-9;
    const double el = dist(sp.left, l_in), er = dist(sp.right, r_in);
    worst_stop = std::max({worst_stop, el - lt, er - rt});
    stop_bad += el > lt || er > rt;

    const int lc = contact_case(frame_x(l_in), f.xc_prime, f.xc, lt);
    const int rc = contact_case(frame_x(r_in), f.xc_prime, f.xc, rt);
    // left: L1 at C', L2 interior, L3 at C; right: R1 at C, R2 interior, R3 at C'
    const int want_l = static_cast<int>(sp.left_case) + 1;
    const int want_r = 3 - static_cast<int>(sp.right_case);
    tag_bad += lc != want_l || rc != want_r;
  }
  std::string seen;
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) {
      if (combos[l][r]) seen += fmt(" L%dR%d:%d", l + 1, r + 1, combos[l][r]);
    }
  }
  return {tag_bad == 0 && stop_bad == 0 && zone_bad == 0 && impossible == 0,
          fmt("10000 instances (of %d valid), tag mismatches %d, stop mismatches %d, zone mismatches %d, impossible "
              "combinations %d;%s",
              generated, tag_bad, stop_bad, zone_bad, impossible, seen.c_str())};
}

// ---------------------------------------------------------------------------
// 3. box/wall zones
// ---------------------------------------------------------------------------

// Whether some base anywhere in the closed box puts the link within τ of W at angle θ.
// dist(W - t·u, B) is convex in t, so a ternary search finds the closest link position.
bool box_forbids(const Rect& b, const Segment2& W, const LinkGeom& g, double theta) {
  const Point2 u = unit_vector(theta);
  auto d = [&](double t) { return sep_segment_rect({W.a - t * u, W.b - t * u}, b); };
  double lo = 0.0, hi = g.ell;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (d(m1) <= d(m2)) hi = m2; else lo = m1;
  }
  return std::min({d(0.0), d(g.ell), d(0.5 * (lo + hi))}) <= g.tau;
}

// Measure of the forbidden angles of the whole box: n-sample sweep, then 60-step bisection per arc end.
double box_union_measure(const Rect& b, const Segment2& W, const LinkGeom& g, int n) {
  const double h = kTwoPi / n;
  std::vector<char> on(n);
  int count = 0;
  for (int k = 0; k < n; ++k) count += on[k] = box_forbids(b, W, g, k * h);
  if (count == n) return kTwoPi;
  double m = 0.0;
  for (int k = 0; k < n; ++k) {
    if (on[k] == on[(k + 1) % n]) continue;
    double lo = k * h, hi = lo + h;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (box_forbids(b, W, g, mid) == static_cast<bool>(on[k]) ? lo : hi) = mid;
    }
    m += on[k] ? 0.5 * (lo + hi) : -0.5 * (lo + hi);
  }
  if (m < 0.0) m += kTwoPi;
  return m;
}

Verdict box_wall() {
  std::mt19937_64 rng(1003);
  int over_three = 0, escaping = 0, tested = 0, cone_hist[4] = {};
  for (int i = 0; i < 10000; ++i) {
    const LinkGeom g{uniform(rng, 1, 5), uniform(rng, 0.05, 1)};
    const double w = uniform(rng, 0.1, 2);
    const Rect b{0, 0, w, w * uniform(rng, 0.3, 1)};
    const double r = g.ell + g.tau + w;
    const Segment2 W{{uniform(rng, -r, r), uniform(rng, -r, r)}, {uniform(rng, -r, r), uniform(rng, -r, r)}};
    if (W.degenerate()) continue;
    ++tested;
    const auto dec = cones_box_wall(b, W, g);
    if (dec.cones.size() > 3) {
      ++over_three;
      continue;
    }
    cone_hist[dec.cones.size()]++;
    const auto sw = oracle::sweep_forbidden(grid_bases(b, 8), Feature::make_wall(W), g, 3600);
    escaping += sweep_escapes(dec.zone(), sw) != 0;
  }

  // excess over the oracle union, and gap to the centre's zone, as the box halves
  int trend_cases = 0, excess_bad = 0, gap_bad = 0;
  double max_excess = 0.0;
  while (trend_cases < 100) {
    const LinkGeom g{uniform(rng, 2, 5), uniform(rng, 0.1, 1)};
    const Point2 c{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const double r = g.ell + g.tau;
    const Segment2 W{c + Point2{uniform(rng, -r, r), uniform(rng, -r, r)}, c + Point2{uniform(rng, -r, r), uniform(rng, -r, r)}};
    if (W.degenerate() || sep_point_segment(c, W) < g.tau + 0.5) continue;
    const AngularSet centre = forb_vertex_wall(c, W, g);
    if (centre.empty()) continue;
    ++trend_cases;
    double prev_excess = 1e9, prev_gap = 1e9;
    for (int h = 0; h <= 5; ++h) {
      const double half = 0.25 / (1 << h);
      const Rect b{c.x - half, c.y - half, c.x + half, c.y + half};
      const double fm = forb_box_wall(b, W, g).measure();
      const double excess = fm - box_union_measure(b, W, g, 3600);
      const double gap = fm - centre.measure();
      max_excess = std::max(max_excess, excess);
      // containment at every level, and never growing beyond the rounding floor
      excess_bad += excess < -1e-9 || excess > prev_excess + 1e-9;
      gap_bad += !(gap < prev_gap);
      prev_excess = excess;
      prev_gap = gap;
    }
  }
  return {over_three == 0 && escaping == 0 && excess_bad == 0 && gap_bad == 0,
          fmt("%d pairs, cones 0/1/2/3: %d/%d/%d/%d, >3 cones %d, oracle escapes %d; halving trend on %d cases: max "
              "excess %.1e, excess increases %d, gap non-decreases %d",
              tested, cone_hist[0], cone_hist[1], cone_hist[2], cone_hist[3], over_three, escaping, trend_cases,
              max_excess, excess_bad, gap_bad)};
}

// ---------------------------------------------------------------------------
// 4. empty rotational boxes
// ---------------------------------------------------------------------------

// Dense n×n sampling of the closed box, looking for a point in the strip.
bool sampled_witness(const RotBox& br, double kappa, Tag tag, int n = 200) {
  for (int i = 0; i < n; ++i) {
    const double t1 = br.t1.lo + br.t1.width() * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double t2 = br.t2.lo + br.t2.width() * j / (n - 1);
      const double d = tag == Tag::LT ? t2 - t1 : t1 - t2;
      if (kappa < d && d < kTwoPi - kappa) return true;
    }
  }
  return false;
}

Verdict box_empty() {
  std::mt19937_64 rng(1004);
  int disagree = 0, empties = 0, rep_bad = 0, missed = 0;
  std::string cases;
  for (int i = 0; i < 10000; ++i) {
    double a = uniform(rng, 0, kTwoPi), b = uniform(rng, 0, kTwoPi);
    double c = uniform(rng, 0, kTwoPi), d = uniform(rng, 0, kTwoPi);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const RotBox br{{a, b}, {c, d}};
    const double kappa = uniform(rng, 0, kPi);
    const Tag tag = i % 2 ? Tag::LT : Tag::GT;
    const bool empty = is_box_empty(br, kappa, tag);
    const bool witness = sampled_witness(br, kappa, tag);
    empties += empty;
    if (empty == witness) {
      ++disagree;
      cases += fmt(" [%s kappa=%.6f t1=[%.6f,%.6f] t2=[%.6f,%.6f] exact=%s]", to_string(tag), kappa, a, b, c, d,
                   empty ? "empty" : "non-empty");
      if (!empty) {
        // the grid missed the strip; confirm the exact witness really lies in it
        const auto [r1, r2] = representative(br, kappa, tag);
        missed += br.t1.lo <= r1 && r1 <= br.t1.hi && br.t2.lo <= r2 && r2 <= br.t2.hi && in_strip(r1, r2, kappa, tag);
      }
    }
    if (!empty) {
      const auto [r1, r2] = representative(br, kappa, tag);
      rep_bad += !(br.t1.lo <= r1 && r1 <= br.t1.hi && br.t2.lo <= r2 && r2 <= br.t2.hi && in_strip(r1, r2, kappa, tag));
    }
  }
  return {disagree == 0 && rep_bad == 0,
          fmt("10000 boxes (%d empty), %d disagreements with 200x200 sampling (%d of them grid misses of a verified "
              "strip point), %d bad representatives%s",
              empties, disagree, missed, rep_bad, cases.c_str())};
}

// ---------------------------------------------------------------------------
// 5. soft predicate
// ---------------------------------------------------------------------------

XBox box_around(const Config& p, double w, double aw, double kappa) {
  XBox b;
  b.bt = {p.x - w / 2, p.y - w / 2, p.x + w / 2, p.y + w / 2};
  auto range = [&](double t) { return AngRange{std::max(0.0, t - aw / 2), std::min(kTwoPi, t + aw / 2)}; };
  b.br = {range(p.theta1), range(p.theta2)};
  b.tag = kappa < 0 ? Tag::FULL : (p.theta1 < p.theta2 ? Tag::LT : Tag::GT);
  return b;
}

// Uniform configurations of the X-box (rejection on the strip).
std::vector<Config> sample_box(const XBox& b, double kappa, int n, std::mt19937_64& rng) {
  std::vector<Config> out;
  for (int tries = 0; static_cast<int>(out.size()) < n && tries < 50 * n; ++tries) {
    const double t1 = uniform(rng, b.br.t1.lo, b.br.t1.hi), t2 = uniform(rng, b.br.t2.lo, b.br.t2.hi);
    if (!in_strip(t1, t2, kappa, b.tag)) continue;
    out.push_back(Config{uniform(rng, b.bt.x0, b.bt.x1), uniform(rng, b.bt.y0, b.bt.y1), t1, t2}.normalized());
  }
  return out;
}

Status classify_fresh(const XBox& b, const Environment& env, const RobotSpec& r) {
  return classify(b, feature_set(b.bt, FeatureSet::all(env), env, r), env, r);
}

Verdict soft_predicate() {
  std::mt19937_64 rng(1005);
  const std::vector<bench::Scene> scenes{bench::random_triangles(2, 60, 0.2), bench::maze(2)};

  // conservativeness
  int boxes[2] = {0, 0}, violations = 0, short_boxes = 0;
  long samples = 0;
  for (int i = 0; boxes[0] + boxes[1] < 500; ++i) {
    const auto& s = scenes[i % 2];
    const Rect bb = s.env.bbox();
    const Config p{uniform(rng, bb.x0 + 4, bb.x1 - 4), uniform(rng, bb.y0 + 4, bb.y1 - 4), uniform(rng, 0, kTwoPi),
                   uniform(rng, 0, kTwoPi)};
    if (in_band(p.theta1, p.theta2, s.robot.kappa)) continue;
    const XBox b = box_around(p, uniform(rng, 0.05, 3), uniform(rng, 0.01, 1), s.robot.kappa);
    if (b.tag != Tag::FULL && is_box_empty(b.br, s.robot.kappa, b.tag)) continue;
    const Status st = classify_fresh(b, s.env, s.robot);
    if (st != Status::FREE && st != Status::STUCK) continue;
    // keep the two labels balanced
    const int k = st == Status::FREE ? 0 : 1;
    if (boxes[k] >= 250) continue;
    ++boxes[k];
    const auto cs = sample_box(b, s.robot.kappa, 10000, rng);
    short_boxes += cs.size() < 10000;
    for (const auto& c : cs) {
      ++samples;
      violations += oracle::config_free(c, s.env, s.robot) != (st == Status::FREE);
    }
  }

  // convergence around configurations that are free or stuck with margin
  constexpr int kLevels = 8;
  int points[2] = {0, 0}, undecided = 0, wrong = 0, level_hist[kLevels + 1] = {};
  for (int i = 0; points[0] + points[1] < 300; ++i) {
    const auto& s = scenes[i % 2];
    const Rect bb = s.env.bbox();
    const Config p{uniform(rng, bb.x0 + 4, bb.x1 - 4), uniform(rng, bb.y0 + 4, bb.y1 - 4), uniform(rng, 0, kTwoPi),
                   uniform(rng, 0, kTwoPi)};
    if (in_band(p.theta1, p.theta2, s.robot.kappa + 0.1)) continue;
    const double clear = oracle::config_clearance(p, s.env, s.robot);
    if (std::fabs(clear) < 0.1) continue;
    const int k = clear > 0 ? 0 : 1;
    if (points[k] >= 150) continue;
    ++points[k];
    bool reached = false;
    for (int level = 0; level <= kLevels && !reached; ++level) {
      const double w = 1.0 / (1 << level);
      const Status st = classify_fresh(box_around(p, w, w / 4, s.robot.kappa), s.env, s.robot);
      if (st == Status::FREE || st == Status::STUCK) {
        reached = true;
        wrong += (st == Status::FREE) != (k == 0);
        level_hist[level]++;
      }
    }
    undecided += !reached;
  }
  std::string hist;
  for (int l = 0; l <= kLevels; ++l) hist += fmt("%s%d", l ? "/" : "", level_hist[l]);
  return {violations == 0 && short_boxes == 0 && undecided == 0 && wrong == 0,
          fmt("%d FREE + %d STUCK boxes, %ld samples, %d violations; convergence on %d free + %d stuck points: "
              "decided at levels 0..8 %s, undecided %d, wrong %d",
              boxes[0], boxes[1], samples, violations, points[0], points[1], hist.c_str(), undecided, wrong)};
}

// ---------------------------------------------------------------------------
// 6. planner soundness on the bench suite
// ---------------------------------------------------------------------------

PlanRequest request(const bench::Scene& s) {
  PlanRequest q;
  q.env = s.env;
  q.robot = s.robot;
  q.alpha = s.alpha;
  q.beta = s.beta;
  q.epsilon = s.epsilon;
  return q;
}

const std::vector<bench::Row>& suite_run() {
  static const auto rows = bench::run_suite(bench::standard_suite(), 1);
  return rows;
}

Verdict soundness() {
  int paths = 0, bad = 0;
  double worst_clear = std::numeric_limits<double>::infinity(), worst_band = std::numeric_limits<double>::infinity();
  std::string outcomes;
  for (const auto& r : suite_run()) {
    outcomes += fmt(" %s=%s", r.exp.scene.name.c_str(), to_string(r.outcome));
    if (r.outcome != Outcome::PATH) continue;
    ++paths;
    const auto chk = oracle::validate_path(r.last.path, r.exp.scene.env, r.exp.scene.robot, 1000);
    bad += !chk.ok();
    worst_clear = std::min(worst_clear, chk.min_clearance);
    if (r.exp.scene.robot.non_crossing()) worst_band = std::min(worst_band, chk.band_margin);
  }
  return {paths > 0 && bad == 0,
          fmt("%d paths validated at density 1000, %d invalid, min clearance %.4f, min band margin %.4f;%s", paths, bad,
              worst_clear, worst_band, outcomes.c_str())};
}

// ---------------------------------------------------------------------------
// 7. T-room pattern
// ---------------------------------------------------------------------------

double min_x(const std::vector<Config>& path) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : path) m = std::min(m, c.x);
  return m;
}

Verdict t_room() {
  const bench::TRoomParams p;
  const double eps = 2.0, kappa = bench::detail::deg(7.0);
  const double stem_end = p.bar + p.stem_length;  // where the right room begins
  // start and goal are this far apart in angle, so κ must stay below it
  const double kappa_cap = 2 * p.spread;

  const auto crossing = plan(request(bench::t_room(p, -1.0, eps)));
  const bool direct = crossing.outcome == Outcome::PATH && min_x(crossing.path) >= stem_end;

  const auto nc = plan(request(bench::t_room(p, kappa, eps)));
  const bool detour = nc.outcome == Outcome::PATH && min_x(nc.path) <= p.bar;

  // bisect κ at fixed ε between a PATH and a NO-PATH value
  auto outcome_k = [&](double k) { return plan(request(bench::t_room(p, k, eps))).outcome; };
  double klo = kappa, khi = kappa_cap - bench::detail::deg(0.2);
  bool k_flip = outcome_k(khi) == Outcome::NO_PATH;
  while (k_flip && khi - klo > bench::detail::deg(0.25)) {
    const double mid = 0.5 * (klo + khi);
    (outcome_k(mid) == Outcome::PATH ? klo : khi) = mid;
  }

  // and ε at fixed κ
  auto outcome_e = [&](double e) { return plan(request(bench::t_room(p, kappa, e))).outcome; };
  double elo = eps, ehi = 8.0;
  bool e_flip = outcome_e(ehi) == Outcome::NO_PATH;
  while (e_flip && ehi - elo > 0.25) {
    const double mid = 0.5 * (elo + ehi);
    (outcome_e(mid) == Outcome::PATH ? elo : ehi) = mid;
  }

  return {direct && detour && (k_flip || e_flip),
          fmt("eps=%.1f: crossing %s min x %.2f (right room starts at %.1f); kappa=7deg %s min x %.2f (left room ends "
              "at %.1f); kappa flip %s in (%.2f, %.2f] deg; eps flip at kappa=7deg %s in (%.2f, %.2f]",
              eps, to_string(crossing.outcome), min_x(crossing.path), stem_end, to_string(nc.outcome), min_x(nc.path),
              p.bar, k_flip ? "found" : "not found", klo * 180 / kPi, khi * 180 / kPi, e_flip ? "found" : "not found",
              elo, ehi)};
}

// ---------------------------------------------------------------------------
// 8. corridor bracketing
// ---------------------------------------------------------------------------

Verdict corridor() {
  constexpr int kWidths = 20;
  std::vector<double> widths;
  std::vector<Outcome> out;
  std::string trace;
  for (int i = 0; i < kWidths; ++i) {
    const double w = 0.5 * std::pow(32.0, static_cast<double>(i) / (kWidths - 1));
    widths.push_back(w);
    out.push_back(plan(request(bench::corridor(w))).outcome);
    trace += fmt(" %.3f:%s", w, out.back() == Outcome::PATH ? "P" : out.back() == Outcome::NO_PATH ? "N" : "T");
  }
  // monotone: NO-PATH for every width below the first PATH, PATH from there on
  int first_path = kWidths;
  for (int i = 0; i < kWidths && first_path == kWidths; ++i) {
    if (out[i] == Outcome::PATH) first_path = i;
  }
  bool monotone = true;
  for (int i = 0; i < kWidths; ++i) monotone = monotone && out[i] == (i < first_path ? Outcome::NO_PATH : Outcome::PATH);
  const bool bracketed = first_path > 0 && first_path < kWidths;
  const double ratio = bracketed ? widths[first_path] / widths[first_path - 1] : 0.0;
  return {monotone && bracketed && ratio <= 4.0,
          fmt("eps=0.25, tau=0.5: %s, window (%.3f, %.3f] ratio %.3f;%s", monotone ? "monotone" : "not monotone",
              bracketed ? widths[first_path - 1] : 0.0, bracketed ? widths[first_path] : 0.0, ratio, trace.c_str())};
}

// ---------------------------------------------------------------------------
// 9. passage between the two components of the non-crossing torus
// ---------------------------------------------------------------------------

bool crosses_seam(double a, double b) {
  const double end = a + angle_delta(a, b);
  return end < 0.0 || end >= kTwoPi;
}

Verdict cylinder() {
  // a room with a block in the middle; the links must swap order, which needs one angle to pass 0
  PlanRequest q;
  q.env = Environment(Rect{0, 0, 64, 64}, {{{26, 26}, {38, 26}, {38, 38}, {26, 38}}});
  q.robot = {6, 4, 0.5, 0.3};
  q.alpha = {12, 32, 1.0, 2.0};
  q.beta = {52, 32, 2.0, 1.0};
  q.epsilon = 1.0;
  const auto res = plan(q);
  if (res.outcome != Outcome::PATH) return {false, fmt("outcome %s", to_string(res.outcome))};
  int seams = 0;
  for (std::size_t i = 1; i < res.path.size(); ++i) {
    seams += crosses_seam(res.path[i - 1].theta1, res.path[i].theta1) + crosses_seam(res.path[i - 1].theta2, res.path[i].theta2);
  }
  const auto chk = oracle::validate_path(res.path, q.env, q.robot, 1000);
  const bool swapped = (q.alpha.theta1 < q.alpha.theta2) != (q.beta.theta1 < q.beta.theta2);
  return {swapped && seams > 0 && chk.ok(),
          fmt("%zu waypoints, %d seam crossings, min clearance %.4f, band margin %.4f, %ld samples", res.path.size(),
              seams, chk.min_clearance, chk.band_margin, chk.samples)};
}

// ---------------------------------------------------------------------------
// 10. performance smoke
// ---------------------------------------------------------------------------

Verdict performance() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (double kappa : {-1.0, bench::detail::deg(10.0)}) {
      const auto q = request(bench::random_triangles(seed, 100, kappa));
      const auto t0 = Clock::now();
      const auto res = plan(q);
      const double ms = millis_since(t0);
      ok = ok && ms < 10000.0 && res.outcome != Outcome::TIMEOUT;
      detail += fmt(" seed %llu %s %s %.0f ms;", static_cast<unsigned long long>(seed),
                    kappa < 0 ? "crossing" : "non-crossing", to_string(res.outcome), ms);
    }
  }
  return {ok, "random_triangles(n=100):" + detail};
}

// ---------------------------------------------------------------------------
// 11. determinism
// ---------------------------------------------------------------------------

// CSV with the timing columns (avg_ms, best_ms, std_ms) dropped.
std::string untimed_csv(const std::vector<bench::Row>& rows) {
  std::istringstream in(bench::csv(rows));
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i >= 9 && i <= 11) continue;
      out += cols[i] + (i + 1 < cols.size() ? "," : "\n");
    }
  }
  return out;
}

Verdict determinism() {
  const auto& a = suite_run();
  const auto b = bench::run_suite(bench::standard_suite(), 1);
  int json_diff = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const auto ja = path_json(a[i].exp.scene.robot, a[i].exp.scene.epsilon, a[i].last).dump(2);
    const auto jb = path_json(b[i].exp.scene.robot, b[i].exp.scene.epsilon, b[i].last).dump(2);
    json_diff += ja != jb;
  }
  const bool csv_same = untimed_csv(a) == untimed_csv(b);
  return {a.size() == b.size() && json_diff == 0 && csv_same,
          fmt("%zu experiments run twice: path.json differences %d, CSV %s", a.size(), json_diff,
              csv_same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"point/point forbidden zones", point_point},
      {"vertex/wall stop analysis", stops},
      {"box/wall cones", box_wall},
      {"empty rotational boxes", box_empty},
      {"soft predicate", soft_predicate},
      {"planner soundness", soundness},
      {"T-room pattern", t_room},
      {"corridor bracketing", corridor},
      {"cylinder passage", cylinder},
      {"performance smoke", performance},
      {"determinism", determinism},
  };
  // optional argument: run only the listed criterion numbers
  std::vector<bool> run(criteria.size(), argc <= 1);
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k >= 1 && k <= static_cast<int>(criteria.size())) run[k - 1] = true;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!run[i]) continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2zu %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
