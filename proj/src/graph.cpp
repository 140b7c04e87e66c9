#include "gbm/graph.hpp"

#include <algorithm>

#include "gbm/error.hpp"

namespace gbm {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  require(n < 0xffffffffULL, "vertex count exceeds 32-bit ids");
  for (auto& e : edges) {
    require(e.u < n && e.v < n, "edge endpoint out of range");
    require(e.u != e.v, "self-loops are not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v). Vertex x first receives its smaller
  // neighbors in increasing order, then its larger ones, so every list ends
  // up sorted without a second pass.
  for (const auto& e : edges) g.adjacency_[cursor[e.v]++] = e.u;
  for (const auto& e : edges) g.adjacency_[cursor[e.u]++] = e.v;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for_each_edge([&](VertexId u, VertexId v) { out.push_back({u, v}); });
  return out;
}

}  // namespace gbm
