#pragma once

// Enumeration of all vertex pairs closer than a cutoff, for circle and sphere
// embeddings. Used by the generators and by location-aware recovery.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gbm/geometry.hpp"
#include "gbm/graph.hpp"

namespace gbm {

/// Calls fn(u, v, d) once for every unordered pair u != v with geodesic
/// distance d <= cutoff. Sort-and-sweep: O(n log n + pairs visited).
template <typename Fn>
void for_each_circle_pair_within(const CircleCoords& x, double cutoff, Fn&& fn) {
  const std::size_t n = x.size();
  if (n < 2) return;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return x[a] < x[b] || (x[a] == x[b] && a < b);
  });
  // Walk forward (with wraparound) from each vertex while the forward offset
  // stays within the cutoff. A pair can be reached from both ends only when
  // cutoff >= 1/2; that case is filtered by the position check below.
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId u = order[i];
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t j = (i + k) % n;
      const VertexId v = order[j];
      const double offset = x[v] - x[u] + (j < i ? 1.0 : 0.0);
      if (offset > cutoff) break;
      const double d = geodesic_distance(x[u], x[v]);
      if (d > cutoff) continue;
      // Reached from both sides only if the backward offset is also within
      // the cutoff; keep the visit from the smaller sorted position.
      if (1.0 - offset <= cutoff && j < i) continue;
      fn(u, v, d);
    }
  }
}

/// Calls fn(u, v, d2) once for every unordered pair with squared Euclidean
/// distance d2 <= cutoff^2. Sweep along the first coordinate.
template <typename Fn>
void for_each_sphere_pair_within(const SphereCloud& pts, double cutoff, Fn&& fn) {
  const std::size_t n = pts.size();
  if (n < 2) return;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return pts[a][0] < pts[b][0] || (pts[a][0] == pts[b][0] && a < b);
  });
  const double c2 = cutoff * cutoff;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = pts[order[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto q = pts[order[j]];
      if (q[0] - p[0] > cutoff) break;
      const double d2 = squared_distance(p, q);
      if (d2 <= c2) fn(order[i], order[j], d2);
    }
  }
}

}  // namespace gbm
