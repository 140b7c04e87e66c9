#pragma once

// Evaluation metrics, connectivity diagnostics, closed-form expectations and
// Monte-Carlo phase sweeps.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbm/generators.hpp"
#include "gbm/geometry.hpp"
#include "gbm/graph.hpp"

namespace gbm {

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  double node_error_rate = 0.0;
};

/// Pair-level precision/recall of co-clustering (kUnassigned predictions are
/// singletons) plus the node error rate.
Metrics pair_f_score(std::span<const int> pred, std::span<const int> truth);

/// Fraction of vertices outside the majority truth label of their predicted
/// cluster; unassigned vertices always count. Majority ties go to the
/// smallest truth label.
double node_error_rate(std::span<const int> pred, std::span<const int> truth);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
std::size_t isolated_count(const Graph& g);

/// n (1 - 2(a-b) log n / n)^{n-1} for the circle annulus graph.
double isolated_expectation_1d(std::size_t n, double a, double b);
/// n (1 - p)^{n-1} with p the exact annulus fraction of [b, a] (log n/n)^{1/t} on S^t.
double isolated_expectation_hd(std::size_t n, int t, double a, double b);

/// Vertices with no neighbor at counterclockwise offset in (0, 1/2].
std::size_t left_deficiency_count(const CircleCoords& x, const Graph& g);
/// Mirror image: no neighbor at clockwise offset in (0, 1/2].
std::size_t right_deficiency_count(const CircleCoords& x, const Graph& g);

/// Smallest vertex adjacent to every other vertex within distance r2.
std::optional<VertexId> find_pole(const Graph& g, const CircleCoords& x, double r2);
std::optional<VertexId> find_pole(const Graph& g, const SphereCloud& pts, double r2);

/// Common neighbors of a planted GBM1 pair (u at 0, v at distance x) among
/// n-2 uniformly placed background vertices, half in each cluster.
std::size_t planted_pair_common_neighbors(std::size_t n, double r_s, double r_d, double x,
                                          bool same_cluster, std::uint64_t seed);
/// Exact mean of the above.
double planted_pair_expected_count(std::size_t n, double r_s, double r_d, double x,
                                   bool same_cluster);

enum class SweepFamily { kRag1, kRagT, kIntervalUnion };

struct SweepSpec {
  std::size_t n = 0;
  SweepFamily family = SweepFamily::kRag1;
  int t = 1;       // kRagT only
  double c = 0.0;  // kIntervalUnion: extra short-range band [0, c log n/n]
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct PhasePoint {
  double a = 0.0;
  double b = 0.0;
  std::size_t trials = 0;
  double connected_frac = 0.0;
  double isolated_frac = 0.0;  // trials with at least one isolated vertex
  double mean_components = 0.0;
  double mean_isolated = 0.0;
};

struct GridPoint {
  double a;
  double b;
};

/// Trial k of grid point i uses the substream (seed, i, k); results do not
/// depend on `jobs`.
std::vector<PhasePoint> phase_sweep(const SweepSpec& spec, std::span<const GridPoint> grid);

/// The graph a sweep draws for one trial.
RagInstance sweep_instance(const SweepSpec& spec, GridPoint p, std::uint64_t trial_seed);
std::uint64_t sweep_trial_seed(std::uint64_t seed, std::size_t grid_index, std::size_t trial);

}  // namespace gbm
