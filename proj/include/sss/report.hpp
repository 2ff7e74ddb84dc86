#pragma once
/**
 * @file report.hpp
 * @brief path.json serialization and SVG rendering of a planning run.
 *
 * Both outputs are deterministic: no timestamps or timings, fixed number
 * formatting, leaves in tree order.
 */

#include "sss/planner.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace sss {

/// {format:1, robot, epsilon, outcome, path, stats}; timing is left out on purpose.
[[nodiscard]] inline nlohmann::ordered_json path_json(const RobotSpec& r, double epsilon, const PlanResult& res) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["robot"] = {{"l1", r.ell1}, {"l2", r.ell2}, {"tau", r.tau}, {"kappa", r.kappa}};
  j["epsilon"] = epsilon;
  j["outcome"] = to_string(res.outcome);
  auto path = nlohmann::ordered_json::array();
  for (const auto& c : res.path) path.push_back({c.x, c.y, c.theta1, c.theta2});
  j["path"] = std::move(path);
  j["stats"] = {{"boxes", res.stats.boxes}, {"splits", res.stats.splits}, {"free", res.stats.free},
                {"stuck", res.stats.stuck}, {"mixed", res.stats.mixed}, {"small", res.stats.small},
                {"edges", res.stats.edges}, {"peak_queue", res.stats.peak_queue}};
  return j;
}

/// Reads the path back from a path.json document.
[[nodiscard]] inline std::vector<Config> path_from_json(const nlohmann::json& j) {
  std::vector<Config> out;
  for (const auto& c : j.at("path")) out.push_back({c.at(0), c.at(1), c.at(2), c.at(3)});
  return out;
}

/// Single-line summary printed by the CLI.
[[nodiscard]] inline std::string stats_line(const PlanResult& res) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "outcome=%s time_ms=%.3f boxes=%ld free=%ld stuck=%ld mixed=%ld",
                to_string(res.outcome), res.stats.time_ms, res.stats.boxes, res.stats.free, res.stats.stuck,
                res.stats.mixed + res.stats.small);
  return buf;
}

namespace detail {

inline void svg_num(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  out += buf;
}

}  // namespace detail

struct SvgOptions {
  double scale = 8.0;       // pixels per world unit
  int max_footprints = 12;  // robot drawings along the path
  bool draw_boxes = true;
};

/**
 * Scene, translational leaf boxes coloured by status (FREE green, STUCK red,
 * MIXED wider than ε yellow, MIXED at most ε or SMALL gray), sub-sampled
 * robot footprints and the trace of the joint.
 */
[[nodiscard]] inline std::string render_svg(const Environment& env, const std::vector<XBox>& leaves,
                                            const std::vector<Config>& path, const RobotSpec& r, double epsilon,
                                            const SvgOptions& opt = {}) {
  const Rect bb = env.bbox();
  const double s = opt.scale;
  auto X = [&](double x) { return (x - bb.x0) * s; };
  auto Y = [&](double y) { return (bb.y1 - y) * s; };
  std::string out;
  auto pt = [&](Point2 p) {
    detail::svg_num(out, X(p.x));
    out += ',';
    detail::svg_num(out, Y(p.y));
  };

  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  detail::svg_num(out, (bb.x1 - bb.x0) * s);
  out += "\" height=\"";
  detail::svg_num(out, (bb.y1 - bb.y0) * s);
  out += "\">\n<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\" stroke=\"black\"/>\n";

  if (opt.draw_boxes) {
    out += "<g stroke=\"#555\" stroke-width=\"0.3\" fill-opacity=\"0.35\">\n";
    // several X-boxes share one Bᵗ; draw it once, best status wins (FREE over MIXED over STUCK)
    std::vector<std::pair<Rect, int>> drawn;
    auto rank = [&](const XBox& b) {
      switch (b.status) {
        case Status::FREE: return 3;
        case Status::MIXED: return b.bt.width() > epsilon ? 2 : 1;
        case Status::SMALL: return 1;
        default: return 0;
      }
    };
    std::map<std::array<double, 4>, std::size_t> index;
    for (const auto& b : leaves) {
      const auto [it, fresh] = index.try_emplace({b.bt.x0, b.bt.y0, b.bt.x1, b.bt.y1}, drawn.size());
      if (fresh) {
        drawn.emplace_back(b.bt, rank(b));
      } else {
        drawn[it->second].second = std::max(drawn[it->second].second, rank(b));
      }
    }
    static const char* colors[] = {"red", "gray", "yellow", "green"};
    for (const auto& [rect, rk] : drawn) {
      out += "<rect x=\"";
      detail::svg_num(out, X(rect.x0));
      out += "\" y=\"";
      detail::svg_num(out, Y(rect.y1));
      out += "\" width=\"";
      detail::svg_num(out, (rect.x1 - rect.x0) * s);
      out += "\" height=\"";
      detail::svg_num(out, (rect.y1 - rect.y0) * s);
      out += "\" fill=\"";
      out += colors[rk];
      out += "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g fill=\"#333\" stroke=\"black\">\n";
  for (const auto& poly : env.polygons()) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out += ' ';
      pt(poly[i]);
    }
    out += "\"/>\n";
  }
  out += "</g>\n";

  if (!path.empty()) {
    out += "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += ' ';
      pt(path[i].base());
    }
    out += "\"/>\n<g stroke-linecap=\"round\" stroke-opacity=\"0.6\">\n";
    const std::size_t n = path.size();
    const std::size_t k = std::min<std::size_t>(n, std::max(opt.max_footprints, 2));
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t idx = k == 1 ? 0 : i * (n - 1) / (k - 1);
      const Footprints fp = footprints(path[idx], r);
      const double w = std::max(2.0 * r.tau * s, 1.0);
      for (const auto& [tip, color] : {std::pair{fp.a1, "#c06000"}, std::pair{fp.a2, "#6000c0"}}) {
        out += "<line x1=\"";
        detail::svg_num(out, X(fp.a0.x));
        out += "\" y1=\"";
        detail::svg_num(out, Y(fp.a0.y));
        out += "\" x2=\"";
        detail::svg_num(out, X(tip.x));
        out += "\" y2=\"";
        detail::svg_num(out, Y(tip.y));
        out += "\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"";
        detail::svg_num(out, w);
        out += "\"/>\n";
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sss
