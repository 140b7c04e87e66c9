#pragma once

// Two-phase recovery for dense graphs (constant radii) over an edge-probe
// oracle. Phase 1 runs the triangle filter on the subgraph induced by h
// random vertices; phase 2 places every other vertex by majority vote over
// g probes into each provisional cluster. Total probes:
//   h(h-1)/2 + (n-h) * 2g.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "gbm/graph.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {

/// Answers adjacency queries and counts distinct unordered pairs probed.
/// Re-probing a pair is free. Thread-safe as long as the backing is.
class EdgeOracle {
 public:
  using Adjacency = std::function<bool(VertexId, VertexId)>;

  /// The graph must outlive the oracle.
  explicit EdgeOracle(const Graph& g);
  /// Implicit backing, e.g. a geometric rule evaluated on demand, so dense
  /// instances need not be materialized.
  EdgeOracle(std::size_t n, Adjacency adjacent);

  bool query(VertexId u, VertexId v);
  std::uint64_t queries() const noexcept { return queries_.load(std::memory_order_relaxed); }
  std::size_t num_vertices() const noexcept { return n_; }

 private:
  std::size_t n_;
  Adjacency adjacent_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> probed_;
  std::atomic<std::uint64_t> queries_{0};
};

struct MajorityVote {
  int cluster;  // 0 or 1
  bool tie;
};

/// argmax over (k1, k2) with ties sent to cluster 0.
MajorityVote majority_assign(std::size_t k1, std::size_t k2) noexcept;

/// Both provisional cluster sizes within h/2 +- sqrt(6 h ln n).
bool phase1_balance_check(std::size_t h, std::size_t c1, std::size_t c2, std::size_t n);

struct DenseResult {
  std::vector<int> labels;
  std::uint64_t queries_used = 0;
  std::size_t phase1_c1 = 0;  // provisional cluster sizes among the h samples
  std::size_t phase1_c2 = 0;
  std::vector<VertexId> phase1_sample;
  std::size_t ties = 0;
  DensePlan plan;
};

/// Raises ErrorKind::kPhase1Degenerate when phase 1 does not produce two
/// clusters of at least g vertices each (or two non-empty clusters when the
/// plan probes everything).
DenseResult dense_recover(EdgeOracle& oracle, const DensePlan& plan, std::uint64_t seed);

}  // namespace gbm
