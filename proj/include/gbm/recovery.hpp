#pragma once

// Triangle-count community recovery: every edge is kept or deleted from its
// common-neighbor count, and the components of what remains are the
// recovered clusters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbm/geometry.hpp"
#include "gbm/graph.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {

inline constexpr int kUnassigned = -1;

/// Size of N(u) ∩ N(v) by sorted merge.
std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v);

/// Whether thresholds compare count/n (sparse 1-D) or raw counts (HD, dense).
enum class CountScale { kNormalized, kAbsolute };

struct ProcessThresholds {
  CountScale scale = CountScale::kAbsolute;
  double e_s = 0.0;
  std::optional<double> e_d;  // absent: only the high-count branch keeps
};

ProcessThresholds process_thresholds(const ThresholdSet1D& th);
ProcessThresholds process_thresholds(const ThresholdSetHD& th);

/// Keep iff value >= E_S or value <= E_D, value = count/n or count.
bool process_edge(std::size_t count, std::size_t n, const ProcessThresholds& th);

struct EdgeDecision {
  VertexId u;
  VertexId v;
  std::uint32_t count;
  bool kept;
};

struct RecoveryStats {
  std::size_t edges_total = 0;
  std::size_t edges_removed = 0;
  std::size_t edges_examined = 0;  // < edges_total only in fast mode
  std::size_t components_count = 0;
};

struct RecoveryResult {
  std::vector<EdgeDecision> decisions;
  std::vector<VertexId> components;  // smallest member of each vertex's component
  std::vector<int> labels;           // 0, 1, or kUnassigned
  RecoveryStats stats;
};

struct FilterOptions {
  /// Skip edges whose endpoints are already joined by kept edges. Sequential;
  /// examines fewer edges, so decisions differ from the default mode.
  bool fast_mode = false;
  bool keep_decisions = true;
};

/// Applies the process filter to every edge and labels the components.
RecoveryResult filter_and_cluster(const Graph& g, const ProcessThresholds& th,
                                  const FilterOptions& opts = {});

RecoveryResult recover_gbm1(const Graph& g, double a, double b, const FilterOptions& opts = {});

RecoveryResult recover_gbm_hd(const Graph& g, int t, double r_s, double r_d, double c_s = 1.0,
                              double c_d = 1.0, const FilterOptions& opts = {});

std::vector<VertexId> connected_components(std::size_t n, std::span<const Edge> edges);

/// Labels the two largest components 0 and 1 (size ties go to the component
/// with the smaller minimum vertex); everything else is kUnassigned.
std::vector<int> label_two_largest(std::span<const VertexId> components);

std::size_t count_components(std::span<const VertexId> components);

struct LocationRecovery {
  std::vector<int> labels;                 // largest constraint component only
  std::size_t constraint_components = 0;   // including singletons
  std::size_t constrained_pairs = 0;
  bool conflict = false;
};

/// Uses vertex positions: a pair at distance in [r_d, r_s] must be
/// same-cluster if adjacent and cross-cluster otherwise. Constraints are
/// solved by parity union-find. On inconsistency `conflict` is set and
/// labels are left unassigned.
LocationRecovery recover_with_locations(const Graph& g, const CircleCoords& x, double r_s,
                                        double r_d);
LocationRecovery recover_with_locations(const Graph& g, const SphereCloud& pts, double r_s,
                                        double r_d);

}  // namespace gbm
