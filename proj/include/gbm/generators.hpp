#pragma once

// Seeded constructors for the geometric block model (GBM) and random annulus
// graphs (RAG) on the circle and on S^t. Every generator keeps its
// embedding, so the edge rule can be re-checked exactly after the fact.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "gbm/geometry.hpp"
#include "gbm/graph.hpp"

namespace gbm {

/// Planted bipartition: label[v] in {0, 1}; vertices 0..n/2-1 carry label 0.
struct GroundTruth {
  std::vector<int> label;
};

GroundTruth balanced_truth(std::size_t n);

using Embedding = std::variant<CircleCoords, SphereCloud>;

struct GbmParams {
  std::size_t n = 0;
  int t = 1;
  double r_s = 0.0;
  double r_d = 0.0;
  std::uint64_t seed = 0;
};

struct GbmInstance {
  Graph graph;
  GroundTruth truth;
  Embedding embedding;
  GbmParams params;
};

struct RagInstance {
  Graph graph;
  Embedding embedding;
};

/// Disjoint closed sub-intervals of [0, 1/2], kept sorted.
class IntervalSet {
 public:
  struct Interval {
    double lo;
    double hi;
  };

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  bool contains(double d) const noexcept;
  double total_length() const noexcept;
  double max_upper() const noexcept;
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

 private:
  std::vector<Interval> intervals_;
};

/// r = a log n / n.
double scaled_radius_1d(double a, std::size_t n);
/// r = a (log n / n)^{1/t}.
double scaled_radius(double a, std::size_t n, int t);

// Edge construction on given embeddings. All comparisons are closed.
Graph build_rag1(const CircleCoords& x, double r1, double r2);
Graph build_rag_t(const SphereCloud& pts, double r1, double r2);
Graph build_gbm1(const CircleCoords& x, std::span<const int> label, double r_s, double r_d);
Graph build_gbm_t(const SphereCloud& pts, std::span<const int> label, double r_s, double r_d);

/// The GBM edge rule as a lazy predicate, agreeing with build_gbm1/build_gbm_t.
/// Embedding and labels are held by reference.
std::function<bool(VertexId, VertexId)> gbm_adjacency(const Embedding& emb,
                                                      std::span<const int> label, double r_s,
                                                      double r_d);
Graph build_interval_union(const CircleCoords& x, const IntervalSet& intervals);

GbmInstance gen_gbm1(std::size_t n, double r_s, double r_d, std::uint64_t seed);
GbmInstance gen_gbm_t(std::size_t n, int t, double r_s, double r_d, std::uint64_t seed);
RagInstance gen_rag1(std::size_t n, double r1, double r2, std::uint64_t seed);
RagInstance gen_rag_t(std::size_t n, int t, double r1, double r2, std::uint64_t seed);
RagInstance gen_interval_union_graph(std::size_t n, const IntervalSet& intervals,
                                     std::uint64_t seed);

/// True iff the edge set of `g` is exactly what the GBM rule gives on `inst`'s
/// embedding and labels, checking every edge plus `non_edge_samples` random
/// non-adjacent pairs (all non-edges when the graph is small).
bool recheck_gbm(const GbmInstance& inst, std::size_t non_edge_samples, std::uint64_t seed);

}  // namespace gbm
