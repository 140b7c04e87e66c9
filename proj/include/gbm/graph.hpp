#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gbm {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in CSR form. Every neighbor list is
/// strictly increasing, so intersections run as sorted merges.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Endpoint order and duplicates are normalized
  /// away; self-loops and out-of-range ids are rejected.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId u, VertexId v) const noexcept;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (VertexId u = 0; u < num_vertices(); ++u)
      for (VertexId v : neighbors(u))
        if (u < v) fn(u, v);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

}  // namespace gbm
