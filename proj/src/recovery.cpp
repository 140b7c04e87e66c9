#include "gbm/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "gbm/error.hpp"
#include "gbm/proximity.hpp"
#include "gbm/union_find.hpp"

namespace gbm {

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v) {
  require(u < g.num_vertices() && v < g.num_vertices(), "vertex id out of range");
  require(u != v, "common neighbors need two distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

ProcessThresholds process_thresholds(const ThresholdSet1D& th) {
  return {CountScale::kNormalized, th.e_s, th.e_d};
}

ProcessThresholds process_thresholds(const ThresholdSetHD& th) {
  return {CountScale::kAbsolute, th.e_s, th.e_d};
}

bool process_edge(std::size_t count, std::size_t n, const ProcessThresholds& th) {
  const double value = th.scale == CountScale::kNormalized
                           ? static_cast<double>(count) / static_cast<double>(n)
                           : static_cast<double>(count);
  if (value >= th.e_s) return true;
  return th.e_d && value <= *th.e_d;
}

RecoveryResult filter_and_cluster(const Graph& g, const ProcessThresholds& th,
                                  const FilterOptions& opts) {
  const std::size_t n = g.num_vertices();
  RecoveryResult res;
  res.stats.edges_total = g.num_edges();
  if (opts.keep_decisions) res.decisions.reserve(opts.fast_mode ? 0 : g.num_edges());

  UnionFind uf(n);
  g.for_each_edge([&](VertexId u, VertexId v) {
    if (opts.fast_mode && uf.same(u, v)) return;
    const std::size_t count = common_neighbor_count(g, u, v);
    const bool kept = process_edge(count, n, th);
    ++res.stats.edges_examined;
    if (kept) {
      uf.unite(u, v);
    } else {
      ++res.stats.edges_removed;
    }
    if (opts.keep_decisions) {
      res.decisions.push_back({u, v, static_cast<std::uint32_t>(count), kept});
    }
  });

  res.components = uf.canonical_ids();
  res.stats.components_count = uf.set_count();
  res.labels = label_two_largest(res.components);
  return res;
}

RecoveryResult recover_gbm1(const Graph& g, double a, double b, const FilterOptions& opts) {
  const auto th = thresholds_1d(g.num_vertices(), a, b);
  return filter_and_cluster(g, process_thresholds(th), opts);
}

RecoveryResult recover_gbm_hd(const Graph& g, int t, double r_s, double r_d, double c_s,
                              double c_d, const FilterOptions& opts) {
  const auto th = thresholds_hd(g.num_vertices(), t, r_s, r_d, c_s, c_d);
  return filter_and_cluster(g, process_thresholds(th), opts);
}

std::vector<VertexId> connected_components(std::size_t n, std::span<const Edge> edges) {
  UnionFind uf(n);
  for (const auto& e : edges) {
    require(e.u < n && e.v < n, "edge endpoint out of range");
    uf.unite(e.u, e.v);
  }
  return uf.canonical_ids();
}

std::size_t count_components(std::span<const VertexId> components) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < components.size(); ++v)
    if (components[v] == v) ++c;
  return c;
}

std::vector<int> label_two_largest(std::span<const VertexId> components) {
  const std::size_t n = components.size();
  std::vector<std::size_t> size(n, 0);
  for (VertexId c : components) ++size[c];
  // Representatives are the smallest members, so scanning in increasing id
  // order and replacing only on strictly larger size breaks ties toward the
  // smaller minimum vertex.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t first = kNone, second = kNone;
  for (std::size_t v = 0; v < n; ++v) {
    if (size[v] == 0) continue;
    if (first == kNone || size[v] > size[first]) {
      second = first;
      first = v;
    } else if (second == kNone || size[v] > size[second]) {
      second = v;
    }
  }
  std::vector<int> labels(n, kUnassigned);
  for (std::size_t v = 0; v < n; ++v) {
    if (components[v] == first) labels[v] = 0;
    else if (components[v] == second) labels[v] = 1;
  }
  return labels;
}

namespace {

// Union-find over vertices where each element also stores its parity
// relative to its parent; parity 1 means "opposite cluster".
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1) {
    for (VertexId v = 0; v < n; ++v) parent_[v] = v;
  }

  std::pair<VertexId, int> find(VertexId x) {
    int p = 0;
    VertexId r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Compress: point every node on the path at the root with its parity.
    int acc = p;
    while (parent_[x] != x) {
      const VertexId next = parent_[x];
      const int here = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= here;
      x = next;
    }
    return {r, p};
  }

  /// Adds constraint parity(x) ^ parity(y) == rel; false on contradiction.
  bool relate(VertexId x, VertexId y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    if (size_[rx] < size_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ rel;
    size_[rx] += size_[ry];
    return true;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<int> parity_;
  std::vector<std::size_t> size_;
};

template <typename ForEachBandPair>
LocationRecovery solve_location_constraints(const Graph& g, ForEachBandPair&& for_each_pair) {
  const std::size_t n = g.num_vertices();
  LocationRecovery out;
  out.labels.assign(n, kUnassigned);
  ParityUnionFind puf(n);
  UnionFind comps(n);
  for_each_pair([&](VertexId u, VertexId v) {
    ++out.constrained_pairs;
    comps.unite(u, v);
    if (!puf.relate(u, v, g.has_edge(u, v) ? 0 : 1)) out.conflict = true;
  });
  out.constraint_components = comps.set_count();
  if (out.conflict || n == 0) return out;

  const auto ids = comps.canonical_ids();
  std::vector<std::size_t> size(n, 0);
  for (VertexId c : ids) ++size[c];
  std::size_t best = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (size[v] > size[best]) best = v;
  const int anchor = puf.find(static_cast<VertexId>(best)).second;
  for (VertexId v = 0; v < n; ++v) {
    if (ids[v] == best) out.labels[v] = puf.find(v).second ^ anchor;
  }
  return out;
}

}  // namespace

LocationRecovery recover_with_locations(const Graph& g, const CircleCoords& x, double r_s,
                                        double r_d) {
  require(x.size() == g.num_vertices(), "embedding size must match the graph");
  require(r_d >= 0.0 && r_d <= r_s && r_s <= 0.5, "radii must satisfy 0 <= r_d <= r_s <= 1/2");
  return solve_location_constraints(g, [&](auto&& emit) {
    for_each_circle_pair_within(x, r_s, [&](VertexId u, VertexId v, double d) {
      if (d >= r_d) emit(u, v);
    });
  });
}

LocationRecovery recover_with_locations(const Graph& g, const SphereCloud& pts, double r_s,
                                        double r_d) {
  require(pts.size() == g.num_vertices(), "embedding size must match the graph");
  require(r_d >= 0.0 && r_d <= r_s && r_s <= 2.0, "radii must satisfy 0 <= r_d <= r_s <= 2");
  const double lo2 = r_d * r_d;
  return solve_location_constraints(g, [&](auto&& emit) {
    for_each_sphere_pair_within(pts, r_s, [&](VertexId u, VertexId v, double d2) {
      if (d2 >= lo2) emit(u, v);
    });
  });
}

}  // namespace gbm
