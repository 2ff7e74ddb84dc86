#pragma once
/**
 * @file environment.hpp
 * @brief Polygonal obstacle sets, their boundary features and the `.env`
 *        text format.
 *
 * Format (one directive per line, `#` starts a comment):
 *
 *     bbox x0 y0 x1 y1
 *     poly x1 y1 x2 y2 ... xk yk
 *
 * Obstacles are closed; overlapping polygons are allowed and mean their union.
 */

#include "sss/geometry.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sss {

/// Thrown on malformed or invalid environment input; `line()` is 1-based (0 if not line specific).
class EnvironmentError : public std::runtime_error {
 public:
  EnvironmentError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

using Polygon = std::vector<Point2>;

[[nodiscard]] inline double signed_area(const Polygon& poly) noexcept {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * a;
}

/// Drop consecutive duplicates (cyclically) and orient counter-clockwise.
[[nodiscard]] inline Polygon normalize_polygon(Polygon poly) {
  Polygon out;
  for (const auto& p : poly) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  if (out.size() >= 3 && signed_area(out) < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

/// Closed point-in-polygon test (crossing number, boundary counts as inside).
[[nodiscard]] inline bool point_in_polygon(const Polygon& poly, Point2 p) noexcept {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = poly[j];
    const Point2 b = poly[i];
    if (sep_point_segment(p, {a, b}) <= 1e-12) return true;
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

class Environment {
 public:
  Environment() = default;

  /// Validates and normalizes; throws EnvironmentError on bad input.
  Environment(Rect bbox, std::vector<Polygon> polygons) : bbox_(bbox) {
    if (!(bbox.x1 > bbox.x0 && bbox.y1 > bbox.y0)) throw EnvironmentError(0, "bbox must have positive extent");
    for (auto& poly : polygons) add_polygon(std::move(poly), 0);
    build_features();
  }

  [[nodiscard]] const Rect& bbox() const noexcept { return bbox_; }
  [[nodiscard]] const std::vector<Polygon>& polygons() const noexcept { return polygons_; }
  [[nodiscard]] const std::vector<Feature>& features() const noexcept { return features_; }
  [[nodiscard]] const std::vector<Rect>& polygon_bounds() const noexcept { return bounds_; }

  /// True iff p lies in the closed union of the obstacle polygons.
  [[nodiscard]] bool point_in_obstacle(Point2 p) const noexcept {
    for (std::size_t i = 0; i < polygons_.size(); ++i) {
      const Rect& r = bounds_[i];
      if (p.x < r.x0 - 1e-12 || p.x > r.x1 + 1e-12 || p.y < r.y0 - 1e-12 || p.y > r.y1 + 1e-12) continue;
      if (point_in_polygon(polygons_[i], p)) return true;
    }
    return false;
  }

  [[nodiscard]] static Environment parse(std::string_view text);
  [[nodiscard]] std::string serialize() const;

  friend bool operator==(const Environment& a, const Environment& b) {
    return a.bbox_ == b.bbox_ && a.polygons_ == b.polygons_;
  }

 private:
  void add_polygon(Polygon poly, int line) {
    Polygon p = normalize_polygon(std::move(poly));
    if (p.size() < 3) throw EnvironmentError(line, "polygon needs at least 3 distinct vertices");
    if (std::fabs(signed_area(p)) <= 0.0) throw EnvironmentError(line, "polygon has zero area");
    Rect r{p[0].x, p[0].y, p[0].x, p[0].y};
    for (const auto& v : p) {
      if (!bbox_.contains(v)) throw EnvironmentError(line, "polygon vertex outside bbox");
      r.x0 = std::min(r.x0, v.x);
      r.y0 = std::min(r.y0, v.y);
      r.x1 = std::max(r.x1, v.x);
      r.y1 = std::max(r.y1, v.y);
    }
    polygons_.push_back(std::move(p));
    bounds_.push_back(r);
  }

  // Ids: for polygon k with n vertices, corners then walls, in vertex order.
  void build_features() {
    features_.clear();
    int id = 0;
    for (std::size_t k = 0; k < polygons_.size(); ++k) {
      const auto& poly = polygons_[k];
      for (const auto& v : poly) features_.push_back(Feature::make_corner(v, id++, static_cast<int>(k)));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        features_.push_back(
            Feature::make_wall({poly[i], poly[(i + 1) % poly.size()]}, id++, static_cast<int>(k)));
      }
    }
  }

  Rect bbox_{0.0, 0.0, 1.0, 1.0};
  std::vector<Polygon> polygons_;
  std::vector<Rect> bounds_;
  std::vector<Feature> features_;
};

inline Environment Environment::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_bbox = false;
  Rect bbox;
  std::vector<std::pair<int, Polygon>> polys;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<double> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw EnvironmentError(lineno, "bad number '" + tok + "'");
      }
    }
    if (key == "bbox") {
      if (have_bbox) throw EnvironmentError(lineno, "duplicate bbox");
      if (nums.size() != 4) throw EnvironmentError(lineno, "bbox takes 4 numbers");
      bbox = {nums[0], nums[1], nums[2], nums[3]};
      have_bbox = true;
    } else if (key == "poly") {
      if (nums.size() % 2 != 0) throw EnvironmentError(lineno, "unpaired polygon coordinate");
      Polygon p;
      for (std::size_t i = 0; i < nums.size(); i += 2) p.push_back({nums[i], nums[i + 1]});
      polys.emplace_back(lineno, std::move(p));
    } else {
      throw EnvironmentError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_bbox) throw EnvironmentError(0, "missing bbox");
  Environment env;
  env.bbox_ = bbox;
  if (!(bbox.x1 > bbox.x0 && bbox.y1 > bbox.y0)) throw EnvironmentError(0, "bbox must have positive extent");
  for (auto& [ln, p] : polys) env.add_polygon(std::move(p), ln);
  env.build_features();
  return env;
}

inline std::string Environment::serialize() const {
  std::string out;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, " %.6f", v);
    out += buf;
  };
  out += "bbox";
  num(bbox_.x0);
  num(bbox_.y0);
  num(bbox_.x1);
  num(bbox_.y1);
  out += '\n';
  for (const auto& poly : polygons_) {
    out += "poly";
    for (const auto& v : poly) {
      num(v.x);
      num(v.y);
    }
    out += '\n';
  }
  return out;
}

[[nodiscard]] inline Environment parse_environment(std::string_view text) { return Environment::parse(text); }
[[nodiscard]] inline const std::vector<Feature>& features(const Environment& env) { return env.features(); }
[[nodiscard]] inline bool point_in_obstacle(const Environment& env, Point2 p) { return env.point_in_obstacle(p); }

}  // namespace sss
