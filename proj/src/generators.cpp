#include "gbm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gbm/error.hpp"
#include "gbm/proximity.hpp"
#include "gbm/rng.hpp"

namespace gbm {

namespace {

void check_circle_band(double r1, double r2) {
  require(r1 >= 0.0 && r1 <= r2 && r2 <= 0.5, "circle radii must satisfy 0 <= r1 <= r2 <= 1/2");
}

void check_sphere_band(double r1, double r2) {
  require(r1 >= 0.0 && r1 <= r2 && r2 <= 2.0, "sphere radii must satisfy 0 <= r1 <= r2 <= 2");
}

void check_even(std::size_t n) {
  require(n >= 2 && n % 2 == 0, "GBM needs an even vertex count");
}

void check_labels(std::size_t n, std::span<const int> label) {
  require(label.size() == n, "label vector length must equal vertex count");
}

}  // namespace

GroundTruth balanced_truth(std::size_t n) {
  check_even(n);
  GroundTruth truth;
  truth.label.assign(n, 0);
  std::fill(truth.label.begin() + static_cast<std::ptrdiff_t>(n / 2), truth.label.end(), 1);
  return truth;
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    require(iv.lo >= 0.0 && iv.lo <= iv.hi && iv.hi <= 0.5,
            "intervals must satisfy 0 <= lo <= hi <= 1/2");
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    require(intervals_[i - 1].hi < intervals_[i].lo, "intervals must be pairwise disjoint");
  }
}

bool IntervalSet::contains(double d) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [d](const Interval& iv) { return iv.lo <= d && d <= iv.hi; });
}

double IntervalSet::total_length() const noexcept {
  double s = 0.0;
  for (const auto& iv : intervals_) s += iv.hi - iv.lo;
  return s;
}

double IntervalSet::max_upper() const noexcept {
  return intervals_.empty() ? 0.0 : intervals_.back().hi;
}

double scaled_radius_1d(double a, std::size_t n) {
  require(n >= 2, "scaled radius needs n >= 2");
  const double nn = static_cast<double>(n);
  return a * std::log(nn) / nn;
}

double scaled_radius(double a, std::size_t n, int t) {
  check_dimension(t);
  require(n >= 2, "scaled radius needs n >= 2");
  const double nn = static_cast<double>(n);
  return a * std::pow(std::log(nn) / nn, 1.0 / t);
}

Graph build_rag1(const CircleCoords& x, double r1, double r2) {
  check_circle_band(r1, r2);
  std::vector<Edge> edges;
  for_each_circle_pair_within(x, r2, [&](VertexId u, VertexId v, double d) {
    if (d >= r1) edges.push_back({u, v});
  });
  return Graph::from_edges(x.size(), std::move(edges));
}

Graph build_rag_t(const SphereCloud& pts, double r1, double r2) {
  check_sphere_band(r1, r2);
  const double lo2 = r1 * r1;
  std::vector<Edge> edges;
  for_each_sphere_pair_within(pts, r2, [&](VertexId u, VertexId v, double d2) {
    if (d2 >= lo2) edges.push_back({u, v});
  });
  return Graph::from_edges(pts.size(), std::move(edges));
}

Graph build_gbm1(const CircleCoords& x, std::span<const int> label, double r_s, double r_d) {
  require(r_d >= 0.0 && r_d <= r_s && r_s <= 0.5, "GBM1 radii must satisfy 0 <= r_d <= r_s <= 1/2");
  check_labels(x.size(), label);
  std::vector<Edge> edges;
  for_each_circle_pair_within(x, r_s, [&](VertexId u, VertexId v, double d) {
    if (label[u] == label[v] || d <= r_d) edges.push_back({u, v});
  });
  return Graph::from_edges(x.size(), std::move(edges));
}

Graph build_gbm_t(const SphereCloud& pts, std::span<const int> label, double r_s, double r_d) {
  require(r_d >= 0.0 && r_d <= r_s && r_s <= 2.0, "GBM radii must satisfy 0 <= r_d <= r_s <= 2");
  check_labels(pts.size(), label);
  const double rd2 = r_d * r_d;
  std::vector<Edge> edges;
  for_each_sphere_pair_within(pts, r_s, [&](VertexId u, VertexId v, double d2) {
    if (label[u] == label[v] || d2 <= rd2) edges.push_back({u, v});
  });
  return Graph::from_edges(pts.size(), std::move(edges));
}

std::function<bool(VertexId, VertexId)> gbm_adjacency(const Embedding& emb,
                                                      std::span<const int> label, double r_s,
                                                      double r_d) {
  require(r_d >= 0.0 && r_d <= r_s, "GBM radii must satisfy 0 <= r_d <= r_s");
  if (const auto* x = std::get_if<CircleCoords>(&emb)) {
    check_labels(x->size(), label);
    return [x, label, r_s, r_d](VertexId u, VertexId v) {
      const double d = geodesic_distance((*x)[u], (*x)[v]);
      return d <= (label[u] == label[v] ? r_s : r_d);
    };
  }
  const auto& pts = std::get<SphereCloud>(emb);
  check_labels(pts.size(), label);
  const double rs2 = r_s * r_s, rd2 = r_d * r_d;
  return [&pts, label, rs2, rd2](VertexId u, VertexId v) {
    const double d2 = squared_distance(pts[u], pts[v]);
    return d2 <= (label[u] == label[v] ? rs2 : rd2);
  };
}

Graph build_interval_union(const CircleCoords& x, const IntervalSet& intervals) {
  std::vector<Edge> edges;
  for_each_circle_pair_within(x, intervals.max_upper(), [&](VertexId u, VertexId v, double d) {
    if (intervals.contains(d)) edges.push_back({u, v});
  });
  return Graph::from_edges(x.size(), std::move(edges));
}

GbmInstance gen_gbm1(std::size_t n, double r_s, double r_d, std::uint64_t seed) {
  check_even(n);
  GbmInstance inst;
  inst.truth = balanced_truth(n);
  auto x = sample_circle(seed, n);
  inst.graph = build_gbm1(x, inst.truth.label, r_s, r_d);
  inst.embedding = std::move(x);
  inst.params = {n, 1, r_s, r_d, seed};
  return inst;
}

GbmInstance gen_gbm_t(std::size_t n, int t, double r_s, double r_d, std::uint64_t seed) {
  check_even(n);
  GbmInstance inst;
  inst.truth = balanced_truth(n);
  auto pts = sample_sphere(seed, n, t);
  inst.graph = build_gbm_t(pts, inst.truth.label, r_s, r_d);
  inst.embedding = std::move(pts);
  inst.params = {n, t, r_s, r_d, seed};
  return inst;
}

RagInstance gen_rag1(std::size_t n, double r1, double r2, std::uint64_t seed) {
  auto x = sample_circle(seed, n);
  Graph g = build_rag1(x, r1, r2);
  return {std::move(g), std::move(x)};
}

RagInstance gen_rag_t(std::size_t n, int t, double r1, double r2, std::uint64_t seed) {
  auto pts = sample_sphere(seed, n, t);
  Graph g = build_rag_t(pts, r1, r2);
  return {std::move(g), std::move(pts)};
}

RagInstance gen_interval_union_graph(std::size_t n, const IntervalSet& intervals,
                                     std::uint64_t seed) {
  auto x = sample_circle(seed, n);
  Graph g = build_interval_union(x, intervals);
  return {std::move(g), std::move(x)};
}

bool recheck_gbm(const GbmInstance& inst, std::size_t non_edge_samples, std::uint64_t seed) {
  const auto& label = inst.truth.label;
  const double r_s = inst.params.r_s, r_d = inst.params.r_d;
  auto rule = [&](VertexId u, VertexId v) {
    const double r = label[u] == label[v] ? r_s : r_d;
    if (const auto* x = std::get_if<CircleCoords>(&inst.embedding)) {
      return geodesic_distance((*x)[u], (*x)[v]) <= r;
    }
    const auto& pts = std::get<SphereCloud>(inst.embedding);
    return squared_distance(pts[u], pts[v]) <= r * r;
  };

  bool ok = true;
  inst.graph.for_each_edge([&](VertexId u, VertexId v) { ok = ok && rule(u, v); });
  if (!ok) return false;

  const std::size_t n = inst.graph.num_vertices();
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs <= non_edge_samples) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!inst.graph.has_edge(u, v) && rule(u, v)) return false;
    return true;
  }
  Stream rng = Stream::derive(seed, {0x6e6f6e65ULL});
  std::size_t checked = 0;
  for (std::size_t tries = 0; checked < non_edge_samples && tries < 50 * non_edge_samples; ++tries) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    if (u == v || inst.graph.has_edge(u, v)) continue;
    if (rule(u, v)) return false;
    ++checked;
  }
  return true;
}

}  // namespace gbm
