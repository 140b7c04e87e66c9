#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

/// Disjoint sets with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true iff x and y were in different sets.
  bool unite(VertexId x, VertexId y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    ++merges_;
    return true;
  }

  bool same(VertexId x, VertexId y) noexcept { return find(x) == find(y); }

  std::size_t merges() const noexcept { return merges_; }
  std::size_t set_count() const noexcept { return parent_.size() - merges_; }

  /// Component id per element, canonicalized to the smallest member.
  std::vector<VertexId> canonical_ids() {
    const std::size_t n = parent_.size();
    std::vector<VertexId> smallest(n, static_cast<VertexId>(n));
    for (VertexId v = 0; v < n; ++v) {
      const VertexId r = find(v);
      if (smallest[r] == n) smallest[r] = v;
    }
    std::vector<VertexId> ids(n);
    for (VertexId v = 0; v < n; ++v) ids[v] = smallest[find(v)];
    return ids;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
  std::size_t merges_ = 0;
};

}  // namespace gbm
