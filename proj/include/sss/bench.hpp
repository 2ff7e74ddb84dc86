#pragma once
/**
 * @file bench.hpp
 * @brief Seeded scene generators and the timing suite.
 *
 * Each generator returns an environment together with a canonical robot,
 * start, goal and ε. Randomness comes from std::mt19937_64 mapped to ranges
 * by hand, so scenes are identical across standard libraries.
 */

#include "sss/planner.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace sss::bench {

struct Scene {
  std::string name;
  Environment env;
  RobotSpec robot;
  Config alpha;
  Config beta;
  double epsilon = 1.0;
};

namespace detail {

[[nodiscard]] inline Polygon rect(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

/// Uniform double in [lo, hi) from the top 53 bits.
[[nodiscard]] inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

[[nodiscard]] inline double deg(double d) { return d * kPi / 180.0; }

}  // namespace detail

// ---------------------------------------------------------------------------
// T-room
// ---------------------------------------------------------------------------

/**
 * Sideways T: a tall room on the left (the bar), a corridor of height
 * `corridor` (the stem) and a low room on the right where the robot starts
 * and ends with its links in swapped order. The right room is too low for a
 * link to stand upright, so a non-crossing robot must reach the left room to
 * turn link 2 around.
 */
struct TRoomParams {
  double ell1 = 12.0;
  double ell2 = 8.0;
  double tau = 0.5;
  double corridor = 3.0;     // stem height
  double room = 8.0;         // right room height
  double bar = 22.0;         // left room width and height
  double stem_length = 18.0;
  double right_length = 26.0;
  double spread = 0.15;      // start/goal angle offsets from the horizontal
};

[[nodiscard]] inline Scene t_room(const TRoomParams& p = {}, double kappa = detail::deg(7.0), double epsilon = 1.0) {
  const double yc = 0.5 * p.bar;
  const double x1 = p.bar, x2 = p.bar + p.stem_length, x3 = x2 + p.right_length;
  std::vector<Polygon> polys{
      detail::rect(x1, yc + 0.5 * p.corridor, x2, p.bar), detail::rect(x1, 0.0, x2, yc - 0.5 * p.corridor),
      detail::rect(x2, yc + 0.5 * p.room, x3, p.bar), detail::rect(x2, 0.0, x3, yc - 0.5 * p.room)};
  Scene s;
  s.name = "t_room";
  s.env = Environment(Rect{0.0, 0.0, x3, p.bar}, std::move(polys));
  s.robot = {p.ell1, p.ell2, p.tau, kappa};
  const double xs = x2 + 0.25 * p.right_length;
  s.alpha = Config{xs, yc, p.spread, kTwoPi - p.spread};
  s.beta = Config{xs, yc, kTwoPi - p.spread, p.spread};
  s.epsilon = epsilon;
  return s;
}

// ---------------------------------------------------------------------------
// Corridor (resolution bracketing)
// ---------------------------------------------------------------------------

/// 64×32 box with a horizontal corridor of width w over x ∈ [16,48]; `blocked` seals it.
[[nodiscard]] inline Scene corridor(double w, bool blocked = false, double epsilon = 0.25) {
  const double yc = 16.0;
  std::vector<Polygon> polys{detail::rect(16.0, 0.0, 48.0, yc - 0.5 * w), detail::rect(16.0, yc + 0.5 * w, 48.0, 32.0)};
  if (blocked) polys.push_back(detail::rect(31.0, yc - 0.5 * w - 1.0, 33.0, yc + 0.5 * w + 1.0));
  Scene s;
  s.name = blocked ? "corridor_blocked" : "corridor";
  s.env = Environment(Rect{0.0, 0.0, 64.0, 32.0}, std::move(polys));
  s.robot = {4.0, 0.25, 0.5, -1.0};
  s.alpha = Config{8.0, yc, 0.0, 0.0};
  s.beta = Config{56.0, yc, 0.0, 0.0};
  s.epsilon = epsilon;
  return s;
}

// ---------------------------------------------------------------------------
// Maze
// ---------------------------------------------------------------------------

/// Perfect maze on an n×n grid of square cells, carved by a seeded depth-first search.
[[nodiscard]] inline Scene maze(std::uint64_t seed = 1, int n = 4, double cell = 16.0, double wall = 2.0) {
  std::mt19937_64 rng(seed);
  // open[c][d]: passage from cell c in direction d (0 E, 1 N, 2 W, 3 S)
  std::vector<std::array<bool, 4>> open(n * n, {false, false, false, false});
  std::vector<char> seen(n * n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  const int dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};
  while (!stack.empty()) {
    const int c = stack.back();
    const int cx = c % n, cy = c / n;
    std::vector<int> dirs;
    for (int d = 0; d < 4; ++d) {
      const int nx = cx + dx[d], ny = cy + dy[d];
      if (nx >= 0 && nx < n && ny >= 0 && ny < n && !seen[ny * n + nx]) dirs.push_back(d);
    }
    if (dirs.empty()) {
      stack.pop_back();
      continue;
    }
    const int d = dirs[rng() % dirs.size()];
    const int nb = (cy + dy[d]) * n + cx + dx[d];
    open[c][d] = true;
    open[nb][(d + 2) % 4] = true;
    seen[nb] = 1;
    stack.push_back(nb);
  }
  const double size = n * cell;
  const double h = 0.5 * wall;
  std::vector<Polygon> polys;
  // outer frame
  polys.push_back(detail::rect(0.0, 0.0, size, h));
  polys.push_back(detail::rect(0.0, size - h, size, size));
  polys.push_back(detail::rect(0.0, 0.0, h, size));
  polys.push_back(detail::rect(size - h, 0.0, size, size));
  for (int cy = 0; cy < n; ++cy) {
    for (int cx = 0; cx < n; ++cx) {
      const int c = cy * n + cx;
      const double x = (cx + 1) * cell, y = (cy + 1) * cell;
      if (cx + 1 < n && !open[c][0]) {
        polys.push_back(detail::rect(x - h, std::max(0.0, y - cell - h), x + h, std::min(size, y + h)));
      }
      if (cy + 1 < n && !open[c][1]) {
        polys.push_back(detail::rect(std::max(0.0, x - cell - h), y - h, std::min(size, x + h), y + h));
      }
    }
  }
  // posts at interior lattice points keep corners solid
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) polys.push_back(detail::rect(i * cell - h, j * cell - h, i * cell + h, j * cell + h));
  }
  Scene s;
  s.name = "maze";
  s.env = Environment(Rect{0.0, 0.0, size, size}, std::move(polys));
  s.robot = {5.0, 4.0, 1.0, detail::deg(10.0)};
  s.alpha = Config{0.5 * cell, 0.5 * cell, 0.0, kPi};
  s.beta = Config{size - 0.5 * cell, size - 0.5 * cell, 0.5 * kPi, 1.5 * kPi};
  s.epsilon = 1.0;
  return s;
}

// ---------------------------------------------------------------------------
// Hole in wall
// ---------------------------------------------------------------------------

/// A wall across a 64×64 box with one hole of height `hole`.
[[nodiscard]] inline Scene hole_in_wall(double hole = 6.0) {
  const double yc = 32.0;
  std::vector<Polygon> polys{detail::rect(30.0, 0.0, 34.0, yc - 0.5 * hole),
                             detail::rect(30.0, yc + 0.5 * hole, 34.0, 64.0)};
  Scene s;
  s.name = "hole_in_wall";
  s.env = Environment(Rect{0.0, 0.0, 64.0, 64.0}, std::move(polys));
  s.robot = {8.0, 6.0, 1.0, detail::deg(10.0)};
  s.alpha = Config{12.0, 20.0, 0.5 * kPi, 1.5 * kPi};
  s.beta = Config{52.0, 44.0, 0.5 * kPi, 1.5 * kPi};
  s.epsilon = 1.0;
  return s;
}

// ---------------------------------------------------------------------------
// 8-way corridor
// ---------------------------------------------------------------------------

/// Eight corridors of width w radiating from the centre of a 128×128 box.
[[nodiscard]] inline Scene eight_way(double w = 10.0) {
  const Point2 c{64.0, 64.0};
  const Rect box{0.0, 0.0, 128.0, 128.0};
  auto to_boundary = [&](Point2 p, Point2 d) {
    double t = 1e300;
    if (d.x > 1e-12) t = std::min(t, (box.x1 - p.x) / d.x);
    if (d.x < -1e-12) t = std::min(t, (box.x0 - p.x) / d.x);
    if (d.y > 1e-12) t = std::min(t, (box.y1 - p.y) / d.y);
    if (d.y < -1e-12) t = std::min(t, (box.y0 - p.y) / d.y);
    const Point2 q = p + t * d;
    return Point2{std::clamp(q.x, box.x0, box.x1), std::clamp(q.y, box.y0, box.y1)};
  };
  std::vector<Polygon> polys;
  for (int k = 0; k < 8; ++k) {
    const double a = k * kPi / 4.0, b = (k + 1) * kPi / 4.0;
    const Point2 da = unit_vector(a), db = unit_vector(b);
    const Point2 na{-da.y, da.x}, nb{-db.y, db.x};
    // upper edge of spoke a meets lower edge of spoke b on the bisector
    const Point2 bis = unit_vector(0.5 * (a + b));
    const double r = 0.5 * w / std::sin(kPi / 8.0);
    const Point2 p = c + r * bis;
    const Point2 qa = to_boundary(c + 0.5 * w * na, da);
    const Point2 qb = to_boundary(c - 0.5 * w * nb, db);
    polys.push_back({p, qa, qb});
  }
  Scene s;
  s.name = "eight_way";
  s.env = Environment(box, std::move(polys));
  s.robot = {6.0, 5.0, 1.0, detail::deg(10.0)};
  s.alpha = Config{116.0, 64.0, kPi, kPi - 0.3};
  s.beta = Config{64.0 - 37.0, 64.0 + 37.0, 1.75 * kPi, 1.75 * kPi - 0.3};
  s.epsilon = 1.0;
  return s;
}

// ---------------------------------------------------------------------------
// Bugtrap
// ---------------------------------------------------------------------------

/// Square trap with inward lips around a mouth of height `mouth`; mouth ≤ 0 seals it.
[[nodiscard]] inline Scene bugtrap(double mouth = 8.0) {
  const double x0 = 40.0, x1 = 88.0, y0 = 40.0, y1 = 88.0, t = 4.0, yc = 64.0;
  std::vector<Polygon> polys{detail::rect(x0, y0, x1, y0 + t), detail::rect(x0, y1 - t, x1, y1),
                             detail::rect(x0, y0, x0 + t, y1)};
  if (mouth > 0.0) {
    const double m = 0.5 * mouth;
    polys.push_back(detail::rect(x1 - t, y0, x1, yc - m));
    polys.push_back(detail::rect(x1 - t, yc + m, x1, y1));
    // lips pointing into the trap
    polys.push_back({{x1 - t, yc - m - 6.0}, {x1 - t, yc - m}, {x1 - t - 10.0, yc - m}});
    polys.push_back({{x1 - t, yc + m}, {x1 - t, yc + m + 6.0}, {x1 - t - 10.0, yc + m}});
  } else {
    polys.push_back(detail::rect(x1 - t, y0, x1, y1));
  }
  Scene s;
  s.name = mouth > 0.0 ? "bugtrap" : "bugtrap_sealed";
  s.env = Environment(Rect{0.0, 0.0, 128.0, 128.0}, std::move(polys));
  s.robot = {6.0, 5.0, 1.0, detail::deg(10.0)};
  s.alpha = Config{58.0, 64.0, 0.0, kPi};
  s.beta = Config{110.0, 64.0, 0.0, kPi};
  s.epsilon = 1.0;
  return s;
}

// ---------------------------------------------------------------------------
// Random triangles
// ---------------------------------------------------------------------------

/// n random triangles in a 128×128 box, kept clear of the start and goal.
[[nodiscard]] inline Scene random_triangles(std::uint64_t seed = 1, int n = 100, double kappa = -1.0) {
  std::mt19937_64 rng(seed);
  Scene s;
  s.name = "random_triangles";
  s.robot = {6.0, 5.0, 1.0, kappa};
  s.alpha = Config{10.0, 10.0, 0.25 * kPi, 0.25 * kPi + 2.0};
  s.beta = Config{118.0, 118.0, 1.25 * kPi, 1.25 * kPi + 2.0};
  s.epsilon = 2.0;
  const double keep = s.robot.max_ell() + s.robot.tau + 4.0;
  std::vector<Polygon> polys;
  while (static_cast<int>(polys.size()) < n) {
    const Point2 c{detail::uniform(rng, 6.0, 122.0), detail::uniform(rng, 6.0, 122.0)};
    const double size = detail::uniform(rng, 2.0, 5.0);
    const double rot = detail::uniform(rng, 0.0, kTwoPi);
    Polygon tri;
    for (int k = 0; k < 3; ++k) {
      const double a = rot + k * kTwoPi / 3.0 + detail::uniform(rng, -0.4, 0.4);
      tri.push_back(c + size * unit_vector(a));
    }
    if (dist(c, s.alpha.base()) < keep + size || dist(c, s.beta.base()) < keep + size) continue;
    polys.push_back(std::move(tri));
  }
  s.env = Environment(Rect{0.0, 0.0, 128.0, 128.0}, std::move(polys));
  return s;
}

[[nodiscard]] inline std::vector<std::string> scene_kinds() {
  return {"t_room", "corridor", "maze", "hole_in_wall", "eight_way", "bugtrap", "random_triangles"};
}

/// Scene by name with its default parameters; throws std::invalid_argument on an unknown kind.
[[nodiscard]] inline Scene generate(const std::string& kind, std::uint64_t seed = 1) {
  if (kind == "t_room") return t_room();
  if (kind == "corridor") return corridor(4.0);
  if (kind == "corridor_blocked") return corridor(4.0, true);
  if (kind == "maze") return maze(seed);
  if (kind == "hole_in_wall") return hole_in_wall();
  if (kind == "eight_way") return eight_way();
  if (kind == "bugtrap") return bugtrap();
  if (kind == "bugtrap_sealed") return bugtrap(0.0);
  if (kind == "random_triangles") return random_triangles(seed);
  throw std::invalid_argument("unknown scene kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

struct Experiment {
  Scene scene;
  std::uint64_t seed = 1;
  Strategy strategy = Strategy::GBF;
};

struct Row {
  Experiment exp;
  Outcome outcome = Outcome::NO_PATH;
  std::vector<double> times_ms;
  PlanResult last;

  [[nodiscard]] double avg() const {
    double s = 0.0;
    for (double t : times_ms) s += t;
    return times_ms.empty() ? 0.0 : s / times_ms.size();
  }
  [[nodiscard]] double best() const {
    double b = times_ms.empty() ? 0.0 : times_ms.front();
    for (double t : times_ms) b = std::min(b, t);
    return b;
  }
  [[nodiscard]] double stdev() const {
    if (times_ms.size() < 2) return 0.0;
    const double m = avg();
    double s = 0.0;
    for (double t : times_ms) s += (t - m) * (t - m);
    return std::sqrt(s / (times_ms.size() - 1));
  }
  /// SSS always answers, so any PATH or NO-PATH counts; only a timeout fails.
  [[nodiscard]] int success() const { return outcome == Outcome::TIMEOUT ? 0 : 1; }
};

/// The standard experiment list.
[[nodiscard]] inline std::vector<Experiment> standard_suite() {
  std::vector<Experiment> out;
  Scene tc = t_room();
  tc.name = "t_room_crossing";
  tc.robot.kappa = -1.0;
  out.push_back({tc});
  out.push_back({t_room()});
  out.push_back({maze(1), 1});
  out.push_back({hole_in_wall()});
  out.push_back({eight_way()});
  out.push_back({bugtrap()});
  out.push_back({bugtrap(0.0)});
  Scene rc = random_triangles(1);
  rc.name = "random_triangles_crossing";
  out.push_back({rc, 1});
  Scene rn = random_triangles(1, 100, detail::deg(10.0));
  rn.name = "random_triangles_noncrossing";
  out.push_back({rn, 1});
  out.push_back({corridor(4.0)});
  out.push_back({corridor(4.0, true)});
  return out;
}

[[nodiscard]] inline PlanRequest request_for(const Experiment& e, std::optional<double> timeout_ms = std::nullopt) {
  PlanRequest q;
  q.env = e.scene.env;
  q.robot = e.scene.robot;
  q.alpha = e.scene.alpha;
  q.beta = e.scene.beta;
  q.epsilon = e.scene.epsilon;
  q.strategy = e.strategy;
  q.seed = e.seed;
  q.timeout_ms = timeout_ms;
  return q;
}

/// Runs every experiment `k` times.
[[nodiscard]] inline std::vector<Row> run_suite(const std::vector<Experiment>& exps, int k = 3,
                                                std::optional<double> timeout_ms = std::nullopt) {
  std::vector<Row> rows;
  for (const auto& e : exps) {
    Row row;
    row.exp = e;
    for (int i = 0; i < k; ++i) {
      row.last = plan(request_for(e, timeout_ms));
      row.outcome = row.last.outcome;
      row.times_ms.push_back(row.last.stats.time_ms);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr const char* kCsvHeader = "scene,seed,l1,l2,tau,kappa,eps,strategy,outcome,avg_ms,best_ms,std_ms,success";

[[nodiscard]] inline std::string csv(const std::vector<Row>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  char buf[512];
  for (const auto& r : rows) {
    const auto& s = r.exp.scene;
    std::snprintf(buf, sizeof buf, "%s,%llu,%.6g,%.6g,%.6g,%.6g,%.6g,%s,%s,%.3f,%.3f,%.3f,%d\n", s.name.c_str(),
                  static_cast<unsigned long long>(r.exp.seed), s.robot.ell1, s.robot.ell2, s.robot.tau,
                  s.robot.kappa, s.epsilon, to_string(r.exp.strategy), to_string(r.outcome), r.avg(), r.best(),
                  r.stdev(), r.success());
    out += buf;
  }
  return out;
}

/// Aligned text table with the Avg / Best / STD / Success columns.
[[nodiscard]] inline std::string table(const std::vector<Row>& rows) {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-30s %-8s %10s %10s %10s %8s\n", "experiment", "outcome", "Avg(ms)", "Best(ms)",
                "STD(ms)", "Success");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-30s %-8s %10.2f %10.2f %10.2f %8d\n", r.exp.scene.name.c_str(),
                  to_string(r.outcome), r.avg(), r.best(), r.stdev(), r.success());
    out += buf;
  }
  return out;
}

}  // namespace sss::bench
