#include "gbm/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "gbm/error.hpp"
#include "gbm/proximity.hpp"
#include "gbm/recovery.hpp"
#include "gbm/rng.hpp"
#include "gbm/union_find.hpp"

namespace gbm {

namespace {

double pairs_of(std::size_t k) {
  return static_cast<double>(k) * (static_cast<double>(k) - 1.0) / 2.0;
}

// Length of [-r1, r1] ∩ [x - r2, x + r2] on the circle of circumference 1.
double band_overlap(double r1, double r2, double x) {
  double total = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double lo = std::max(-r1, x - r2 + k);
    const double hi = std::min(r1, x + r2 + k);
    if (hi > lo) total += hi - lo;
  }
  return std::min(total, 2.0 * std::min(r1, r2));
}

double isolation_expectation(std::size_t n, double p) {
  require(p >= 0.0 && p <= 1.0, "annulus probability must lie in [0, 1]");
  const double nn = static_cast<double>(n);
  if (p == 1.0) return n == 1 ? 1.0 : 0.0;
  return nn * std::exp((nn - 1.0) * std::log1p(-p));
}

template <typename ForEachNearPair>
std::optional<VertexId> first_pole(const Graph& g, ForEachNearPair&& for_each_pair) {
  std::vector<char> bad(g.num_vertices(), 0);
  for_each_pair([&](VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) bad[u] = bad[v] = 1;
  });
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!bad[v]) return v;
  return std::nullopt;
}

}  // namespace

Metrics pair_f_score(std::span<const int> pred, std::span<const int> truth) {
  require(pred.size() == truth.size(), "prediction and truth lengths differ");
  std::map<std::pair<int, int>, std::size_t> joint;
  std::map<int, std::size_t> pred_sizes, truth_sizes;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    ++truth_sizes[truth[i]];
    if (pred[i] == kUnassigned) continue;
    ++pred_sizes[pred[i]];
    ++joint[{pred[i], truth[i]}];
  }
  double tp = 0.0, pred_pairs = 0.0, truth_pairs = 0.0;
  for (const auto& [key, c] : joint) tp += pairs_of(c);
  for (const auto& [key, c] : pred_sizes) pred_pairs += pairs_of(c);
  for (const auto& [key, c] : truth_sizes) truth_pairs += pairs_of(c);

  Metrics m;
  m.precision = pred_pairs > 0.0 ? tp / pred_pairs : 0.0;
  m.recall = truth_pairs > 0.0 ? tp / truth_pairs : 0.0;
  m.f_score = (m.precision > 0.0 && m.recall > 0.0)
                  ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                  : 0.0;
  m.node_error_rate = node_error_rate(pred, truth);
  return m;
}

double node_error_rate(std::span<const int> pred, std::span<const int> truth) {
  require(pred.size() == truth.size(), "prediction and truth lengths differ");
  if (pred.empty()) return 0.0;
  std::map<int, std::map<int, std::size_t>> by_cluster;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == kUnassigned) {
      ++wrong;
      continue;
    }
    ++by_cluster[pred[i]][truth[i]];
  }
  for (const auto& [cluster, counts] : by_cluster) {
    std::size_t size = 0, best = 0;
    // std::map iterates truth labels in increasing order; strict > keeps the
    // smallest label on ties.
    for (const auto& [label, c] : counts) {
      size += c;
      if (c > best) best = c;
    }
    wrong += size - best;
  }
  return static_cast<double>(wrong) / static_cast<double>(pred.size());
}

std::size_t component_count(const Graph& g) {
  UnionFind uf(g.num_vertices());
  g.for_each_edge([&](VertexId u, VertexId v) { uf.unite(u, v); });
  return uf.set_count();
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t isolated_count(const Graph& g) {
  std::size_t c = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) c += g.degree(v) == 0;
  return c;
}

double isolated_expectation_1d(std::size_t n, double a, double b) {
  require(n >= 2 && a >= b && b >= 0.0, "isolated expectation needs n >= 2 and a >= b >= 0");
  const double p = 2.0 * (a - b) * std::log(static_cast<double>(n)) / static_cast<double>(n);
  require(p <= 1.0, "isolated expectation needs 2(a-b) log n / n <= 1");
  return isolation_expectation(n, p);
}

double isolated_expectation_hd(std::size_t n, int t, double a, double b) {
  require(n >= 2 && a >= b && b >= 0.0, "isolated expectation needs n >= 2 and a >= b >= 0");
  const double r2 = scaled_radius(a, n, t);
  const double r1 = scaled_radius(b, n, t);
  require(r2 <= 2.0, "scaled radius exceeds the sphere diameter");
  return isolation_expectation(n, annulus_fraction(t, r1, r2));
}

namespace {

// Vertices with no neighbor whose offset in the given direction is in (0, 1/2].
std::size_t deficiency_count(const CircleCoords& x, const Graph& g, bool counterclockwise) {
  require(x.size() == g.num_vertices(), "embedding size must match the graph");
  std::size_t count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    bool found = false;
    for (VertexId v : g.neighbors(u)) {
      double off = counterclockwise ? x[v] - x[u] : x[u] - x[v];
      if (off < 0.0) off += 1.0;
      if (off > 0.0 && off <= 0.5) {
        found = true;
        break;
      }
    }
    count += !found;
  }
  return count;
}

}  // namespace

std::size_t left_deficiency_count(const CircleCoords& x, const Graph& g) {
  return deficiency_count(x, g, true);
}

std::size_t right_deficiency_count(const CircleCoords& x, const Graph& g) {
  return deficiency_count(x, g, false);
}

std::optional<VertexId> find_pole(const Graph& g, const CircleCoords& x, double r2) {
  require(x.size() == g.num_vertices(), "embedding size must match the graph");
  require(r2 >= 0.0 && r2 <= 0.5, "pole radius must lie in [0, 1/2]");
  return first_pole(g, [&](auto&& emit) {
    for_each_circle_pair_within(x, r2, [&](VertexId u, VertexId v, double) { emit(u, v); });
  });
}

std::optional<VertexId> find_pole(const Graph& g, const SphereCloud& pts, double r2) {
  require(pts.size() == g.num_vertices(), "embedding size must match the graph");
  require(r2 >= 0.0 && r2 <= 2.0, "pole radius must lie in [0, 2]");
  return first_pole(g, [&](auto&& emit) {
    for_each_sphere_pair_within(pts, r2, [&](VertexId u, VertexId v, double) { emit(u, v); });
  });
}

std::size_t planted_pair_common_neighbors(std::size_t n, double r_s, double r_d, double x,
                                          bool same_cluster, std::uint64_t seed) {
  require(n >= 4 && n % 2 == 0, "planted pair needs an even n >= 4");
  require(r_d >= 0.0 && r_d <= r_s && r_s <= 0.5 && x >= 0.0 && x <= 0.5,
          "planted pair radii out of range");
  // u sits at 0 in cluster 0; v at x, in cluster 0 or 1.
  const int cu = 0, cv = same_cluster ? 0 : 1;
  std::size_t in_cluster[2] = {n / 2 - 1, n / 2};
  --in_cluster[cv];
  Stream rng = Stream::derive(seed, {0x706c616eULL});
  std::size_t count = 0;
  for (int c = 0; c < 2; ++c) {
    const double ru = c == cu ? r_s : r_d;
    const double rv = c == cv ? r_s : r_d;
    for (std::size_t k = 0; k < in_cluster[c]; ++k) {
      const double z = rng.uniform();
      count += geodesic_distance(z, 0.0) <= ru && geodesic_distance(z, x) <= rv;
    }
  }
  return count;
}

double planted_pair_expected_count(std::size_t n, double r_s, double r_d, double x,
                                   bool same_cluster) {
  require(n >= 4 && n % 2 == 0, "planted pair needs an even n >= 4");
  const double half = static_cast<double>(n / 2);
  if (same_cluster) {
    return (half - 2.0) * band_overlap(r_s, r_s, x) + half * band_overlap(r_d, r_d, x);
  }
  return (half - 1.0) * band_overlap(r_s, r_d, x) + (half - 1.0) * band_overlap(r_d, r_s, x);
}

std::uint64_t sweep_trial_seed(std::uint64_t seed, std::size_t grid_index, std::size_t trial) {
  return Stream::derive(seed, {grid_index, trial})();
}

RagInstance sweep_instance(const SweepSpec& spec, GridPoint p, std::uint64_t trial_seed) {
  require(p.a >= p.b && p.b >= 0.0, "grid points need a >= b >= 0");
  switch (spec.family) {
    case SweepFamily::kRag1:
      return gen_rag1(spec.n, scaled_radius_1d(p.b, spec.n), scaled_radius_1d(p.a, spec.n),
                      trial_seed);
    case SweepFamily::kRagT:
      return gen_rag_t(spec.n, spec.t, scaled_radius(p.b, spec.n, spec.t),
                       scaled_radius(p.a, spec.n, spec.t), trial_seed);
    case SweepFamily::kIntervalUnion: {
      const double lo = scaled_radius_1d(p.b, spec.n);
      const double hi = scaled_radius_1d(p.a, spec.n);
      const double c = scaled_radius_1d(spec.c, spec.n);
      std::vector<IntervalSet::Interval> ivs;
      if (c >= lo) {
        ivs.push_back({0.0, std::max(c, hi)});
      } else {
        if (spec.c > 0.0) ivs.push_back({0.0, c});
        ivs.push_back({lo, hi});
      }
      return gen_interval_union_graph(spec.n, IntervalSet(std::move(ivs)), trial_seed);
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown sweep family");
}

std::vector<PhasePoint> phase_sweep(const SweepSpec& spec, std::span<const GridPoint> grid) {
  require(spec.trials >= 1, "phase sweep needs trials >= 1");
  struct TrialOutcome {
    bool connected;
    std::size_t isolated;
    std::size_t components;
  };
  const std::size_t total = grid.size() * spec.trials;
  std::vector<TrialOutcome> outcomes(total);

  auto run = [&](std::size_t job) {
    const std::size_t gi = job / spec.trials, k = job % spec.trials;
    const auto inst = sweep_instance(spec, grid[gi], sweep_trial_seed(spec.seed, gi, k));
    const std::size_t comps = component_count(inst.graph);
    outcomes[job] = {comps <= 1, isolated_count(inst.graph), comps};
  };

  const unsigned jobs = std::max(1U, spec.jobs);
  if (jobs == 1 || total < 2) {
    for (std::size_t j = 0; j < total; ++j) run(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
          for (std::size_t j; (j = next.fetch_add(1)) < total;) {
            try {
              run(j);
            } catch (...) {
              std::lock_guard lock(failure_mu);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<PhasePoint> out;
  out.reserve(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    PhasePoint pt{grid[gi].a, grid[gi].b, spec.trials, 0, 0, 0, 0};
    for (std::size_t k = 0; k < spec.trials; ++k) {
      const auto& o = outcomes[gi * spec.trials + k];
      pt.connected_frac += o.connected;
      pt.isolated_frac += o.isolated > 0;
      pt.mean_components += static_cast<double>(o.components);
      pt.mean_isolated += static_cast<double>(o.isolated);
    }
    const double tr = static_cast<double>(spec.trials);
    pt.connected_frac /= tr;
    pt.isolated_frac /= tr;
    pt.mean_components /= tr;
    pt.mean_isolated /= tr;
    out.push_back(pt);
  }
  return out;
}

}  // namespace gbm
