#pragma once
/**
 * @file planner.hpp
 * @brief Soft Subdivision Search over X-boxes.
 *
 * The tree root stands for B₀ × 𝕋; its children come from the initial torus
 * split. MIXED boxes wider than ε are split translationally; MIXED boxes of
 * width ≤ ε get one T/R rotational split whose children are FREE by
 * construction. FREE leaves are the nodes of the connectivity graph G and
 * are merged in a union-find as they appear.
 *
 *   1. split Box(α) until FREE (NO-PATH if it cannot be split further)
 *   2. the same for β
 *   3. split Q.next() until Find(Box(α)) = Find(Box(β)) or Q is empty
 */

#include "sss/classify.hpp"
#include "sss/union_find.hpp"

#include <chrono>
#include <deque>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sss {

enum class Strategy { BFS, GBF, DIST_SIZE };
enum class Outcome { PATH, NO_PATH, TIMEOUT };

[[nodiscard]] inline const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::BFS: return "bfs";
    case Strategy::GBF: return "gbf";
    default: return "dist_size";
  }
}

[[nodiscard]] inline const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::PATH: return "PATH";
    case Outcome::NO_PATH: return "NO-PATH";
    default: return "TIMEOUT";
  }
}

[[nodiscard]] inline std::optional<Strategy> parse_strategy(const std::string& s) {
  if (s == "bfs") return Strategy::BFS;
  if (s == "gbf") return Strategy::GBF;
  if (s == "dist_size" || s == "dist+size") return Strategy::DIST_SIZE;
  return std::nullopt;
}

/// Queue order: smaller key first. Ties go to the earlier-created box.
using QueueKey = std::tuple<double, int>;

[[nodiscard]] inline QueueKey queue_key(Strategy s, const XBox& b, Point2 goal) noexcept {
  const double d = dist(b.bt.center(), goal);
  switch (s) {
    case Strategy::BFS: return {0.0, b.id};
    case Strategy::GBF: return {d, b.id};
    default: return {d / std::max(b.bt.width(), 1e-300), b.id};
  }
}

/// Min-queue of box ids (Q.GetNext).
class BoxQueue {
 public:
  void push(QueueKey k) { q_.push(k); }
  [[nodiscard]] bool empty() const noexcept { return q_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return q_.size(); }
  int pop() {
    const int id = std::get<1>(q_.top());
    q_.pop();
    return id;
  }

 private:
  std::priority_queue<QueueKey, std::vector<QueueKey>, std::greater<QueueKey>> q_;
};

struct PlanRequest {
  Environment env;
  RobotSpec robot;
  Config alpha;
  Config beta;
  double epsilon = 1.0;
  std::optional<Rect> b0;  // defaults to the environment bbox
  Strategy strategy = Strategy::GBF;
  std::uint64_t seed = 0;
  std::optional<double> timeout_ms;
};

struct PlanStats {
  long boxes = 0;  // boxes created, root excluded
  long splits = 0;
  long free = 0;   // leaves by final status
  long stuck = 0;
  long mixed = 0;
  long small = 0;
  long edges = 0;
  long peak_queue = 0;
  double time_ms = 0.0;
};

struct PlanResult {
  Outcome outcome = Outcome::NO_PATH;
  std::vector<Config> path;
  PlanStats stats;
  std::vector<XBox> leaves;  // final subdivision, for rendering
};

/// Subdivision tree, queue and union-find of one planning run.
class Planner {
 public:
  explicit Planner(PlanRequest req) : req_(std::move(req)) {
    req_.robot.validate();
    if (!(req_.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    b0_ = req_.b0.value_or(req_.env.bbox());
    req_.alpha = req_.alpha.normalized();
    req_.beta = req_.beta.normalized();
    for (const Config* c : {&req_.alpha, &req_.beta}) {
      const char* which = c == &req_.alpha ? "start" : "goal";
      if (!b0_.contains(c->base())) throw std::invalid_argument(std::string(which) + " lies outside the box B0");
      if (req_.robot.non_crossing() && in_band(c->theta1, c->theta2, req_.robot.kappa)) {
        throw std::invalid_argument(std::string(which) + " violates the non-crossing band");
      }
    }
  }

  PlanResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult res;
    res.outcome = search(t0);
    if (res.outcome == Outcome::PATH) res.path = extract_path();
    for (const auto& n : nodes_) {
      if (n.box.id == 0 || !n.box.is_leaf()) continue;
      res.leaves.push_back(n.box);
      switch (n.box.status) {
        case Status::FREE: ++stats_.free; break;
        case Status::STUCK: ++stats_.stuck; break;
        case Status::SMALL: ++stats_.small; break;
        default: ++stats_.mixed; break;
      }
    }
    stats_.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    res.stats = stats_;
    return res;
  }

  [[nodiscard]] const XBox& box(int id) const { return nodes_[id].box; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    XBox box;
    FeatureSet phi;
    BoxZones zones;
  };
  struct Edge {
    int to;
    Config face;
  };

  [[nodiscard]] double kappa() const noexcept { return req_.robot.kappa; }

  [[nodiscard]] bool splittable(const XBox& b) const noexcept {
    return b.status == Status::MIXED && (b.bt.width() > req_.epsilon || !b.rot_split);
  }


  int add_node(XBox b, FeatureSet phi, BoxZones zones) {
    b.id = static_cast<int>(nodes_.size());
    nodes_.push_back({std::move(b), std::move(phi), std::move(zones)});
    if (nodes_.back().box.parent >= 0) nodes_[nodes_.back().box.parent].box.children.push_back(nodes_.back().box.id);
    ++stats_.boxes;
    adj_.emplace_back();
    return nodes_.back().box.id;
  }

  /// Classifies a freshly created node and hooks it into G or Q.
  void register_node(int id) {
    Node& n = nodes_[id];
    n.box.status = classify_with_zones(n.box, n.zones, n.phi, req_.env, req_.robot);
    if (n.box.status == Status::MIXED && !splittable(n.box)) n.box.status = Status::SMALL;
    if (n.box.status == Status::MIXED) {
      queue_.push(queue_key(req_.strategy, n.box, req_.beta.base()));
      stats_.peak_queue = std::max<long>(stats_.peak_queue, static_cast<long>(queue_.size()));
    } else if (n.box.status == Status::FREE) {
      n.phi = {};
      n.zones = {};
      uf_.make_set(id);
      connect(id);
    } else {
      n.phi = {};
      n.zones = {};
    }
  }

  void collect_free_near(int node, const Rect& r, int self, std::vector<int>& out) const {
    const XBox& b = nodes_[node].box;
    if (node != 0) {
      const Rect& q = b.bt;
      if (q.x1 < r.x0 || r.x1 < q.x0 || q.y1 < r.y0 || r.y1 < q.y0) return;
    }
    if (b.is_leaf()) {
      if (node != self && b.status == Status::FREE) out.push_back(node);
      return;
    }
    for (int c : b.children) collect_free_near(c, r, self, out);
  }

  void connect(int id) {
    std::vector<int> near;
    collect_free_near(0, nodes_[id].box.bt, id, near);
    for (int other : near) {
      if (auto face = face_point(nodes_[id].box, nodes_[other].box, kappa())) {
        adj_[id].push_back({other, *face});
        adj_[other].push_back({id, *face});
        ++stats_.edges;
        uf_.unite(id, other);
      }
    }
  }

  void init_tree() {
    XBox root;
    root.bt = b0_;
    root.br = RotBox{{0.0, kTwoPi}, {0.0, kTwoPi}};
    root.status = Status::MIXED;
    root.id = 0;
    nodes_.push_back({root, FeatureSet::all(req_.env), {}});
    adj_.emplace_back();
    const FeatureSet phi = feature_set(b0_, nodes_[0].phi, req_.env, req_.robot);
    const BoxZones zones = box_zones(b0_, phi, req_.env, req_.robot);
    std::vector<int> ids;
    for (const auto& [br, tag] : initial_torus_split(kappa())) {
      XBox c;
      c.bt = b0_;
      c.br = br;
      c.tag = tag;
      c.parent = 0;
      c.depth = 1;
      ids.push_back(add_node(c, phi, zones));
    }
    nodes_[0].phi = {};
    for (int id : ids) register_node(id);
  }

  void split(int id) {
    ++stats_.splits;
    const XBox parent = nodes_[id].box;
    std::vector<int> ids;
    if (parent.bt.width() > req_.epsilon) {
      for (const XBox& c : split_translational(parent)) {
        FeatureSet phi = feature_set(c.bt, nodes_[id].phi, req_.env, req_.robot);
        BoxZones zones = box_zones(c.bt, phi, req_.env, req_.robot);
        ids.push_back(add_node(c, std::move(phi), std::move(zones)));
      }
    } else {
      for (const XBox& c : split_rotational_TR(parent, nodes_[id].zones.z1, nodes_[id].zones.z2, kappa())) {
        ids.push_back(add_node(c, nodes_[id].phi, nodes_[id].zones));
      }
      if (ids.empty()) nodes_[id].box.status = Status::SMALL;
    }
    nodes_[id].phi = {};
    nodes_[id].zones = {};
    for (int c : ids) register_node(c);
  }

  /// Leaf containing c; the earliest-created child wins on shared faces. -1 if none.
  [[nodiscard]] int locate(const Config& c) const {
    int cur = 0;
    while (!nodes_[cur].box.is_leaf()) {
      int next = -1;
      for (int ch : nodes_[cur].box.children) {
        if (nodes_[ch].box.contains(c, kappa())) {
          next = ch;
          break;
        }
      }
      if (next < 0) return -1;
      cur = next;
    }
    return cur;
  }

  /// Loops 1 and 2: refine the box of c until FREE.
  int make_free(const Config& c) {
    for (;;) {
      const int id = locate(c);
      if (id < 0) return -1;
      const XBox& b = nodes_[id].box;
      if (b.status == Status::FREE) return id;
      if (!splittable(b)) return -1;
      split(id);
    }
  }

  [[nodiscard]] bool timed_out(std::chrono::steady_clock::time_point t0) const {
    if (!req_.timeout_ms) return false;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() > *req_.timeout_ms;
  }

  Outcome search(std::chrono::steady_clock::time_point t0) {
    init_tree();
    alpha_box_ = make_free(req_.alpha);
    if (alpha_box_ < 0) return Outcome::NO_PATH;
    beta_box_ = make_free(req_.beta);
    if (beta_box_ < 0) return Outcome::NO_PATH;
    while (!uf_.same(alpha_box_, beta_box_)) {
      if (timed_out(t0)) return Outcome::TIMEOUT;
      if (queue_.empty()) return Outcome::NO_PATH;
      const int id = queue_.pop();
      const XBox& b = nodes_[id].box;
      if (!b.is_leaf() || !splittable(b)) continue;
      split(id);
    }
    return Outcome::PATH;
  }

  /// Channel by BFS over G, then α, centres and shared-face points, β.
  [[nodiscard]] std::vector<Config> extract_path() const {
    std::vector<int> prev(nodes_.size(), -2);
    std::vector<const Config*> via(nodes_.size(), nullptr);
    std::deque<int> q{alpha_box_};
    prev[alpha_box_] = -1;
    while (!q.empty() && prev[beta_box_] == -2) {
      const int u = q.front();
      q.pop_front();
      for (const auto& e : adj_[u]) {
        if (prev[e.to] != -2) continue;
        prev[e.to] = u;
        via[e.to] = &e.face;
        q.push_back(e.to);
      }
    }
    std::vector<int> chain;
    for (int v = beta_box_; v != -1; v = prev[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());

    std::vector<Config> path{req_.alpha};
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i > 0) path.push_back(*via[chain[i]]);
      path.push_back(nodes_[chain[i]].box.center(kappa()));
    }
    path.push_back(req_.beta);
    return path;
  }

  PlanRequest req_;
  Rect b0_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> adj_;
  BoxQueue queue_;
  UnionFind uf_;
  PlanStats stats_;
  int alpha_box_ = -1;
  int beta_box_ = -1;
};

[[nodiscard]] inline PlanResult plan(const PlanRequest& req) { return Planner(req).run(); }

}  // namespace sss
