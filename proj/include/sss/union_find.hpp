#pragma once
/**
 * @file union_find.hpp
 * @brief Disjoint sets over dense integer keys (path compression + union by rank).
 */

#include <cstdint>
#include <vector>

namespace sss {

class UnionFind {
 public:
  /// Registers `x` as a singleton; keys may arrive in any order.
  void make_set(int x) {
    if (x >= static_cast<int>(parent_.size())) {
      parent_.resize(x + 1, -1);
      rank_.resize(x + 1, 0);
    }
    if (parent_[x] < 0) parent_[x] = x;
  }

  [[nodiscard]] bool contains(int x) const noexcept {
    return x >= 0 && x < static_cast<int>(parent_.size()) && parent_[x] >= 0;
  }

  /// Root of x's set; x must have been registered.
  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true if two different sets were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  [[nodiscard]] bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace sss
