#include "gbm/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "gbm/error.hpp"
#include "gbm/recovery.hpp"
#include "gbm/rng.hpp"
#include "gbm/union_find.hpp"

namespace gbm {

namespace {

std::uint64_t pair_index(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

// First k entries of a Fisher-Yates shuffle of `pool`, returned sorted.
std::vector<VertexId> sample_without_replacement(std::vector<VertexId> pool, std::size_t k,
                                                 Stream rng) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

EdgeOracle::EdgeOracle(const Graph& g)
    : EdgeOracle(g.num_vertices(), [&g](VertexId u, VertexId v) { return g.has_edge(u, v); }) {}

EdgeOracle::EdgeOracle(std::size_t n, Adjacency adjacent) : n_(n), adjacent_(std::move(adjacent)) {
  require(static_cast<bool>(adjacent_), "oracle needs an adjacency function");
  const std::uint64_t words = (n * (n > 0 ? n - 1 : 0) / 2 + 63) / 64;
  probed_ = std::make_unique<std::atomic<std::uint64_t>[]>(words);
  for (std::uint64_t i = 0; i < words; ++i) probed_[i].store(0, std::memory_order_relaxed);
}

bool EdgeOracle::query(VertexId u, VertexId v) {
  require(u < num_vertices() && v < num_vertices() && u != v, "oracle query needs two distinct valid vertices");
  const std::uint64_t idx = pair_index(u, v);
  const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
  const std::uint64_t before = probed_[idx / 64].fetch_or(bit, std::memory_order_relaxed);
  if (!(before & bit)) queries_.fetch_add(1, std::memory_order_relaxed);
  return adjacent_(u, v);
}

MajorityVote majority_assign(std::size_t k1, std::size_t k2) noexcept {
  if (k1 == k2) return {0, true};
  return {k1 > k2 ? 0 : 1, false};
}

bool phase1_balance_check(std::size_t h, std::size_t c1, std::size_t c2, std::size_t n) {
  require(c1 + c2 == h, "cluster counts must sum to h");
  require(n >= 2, "balance check needs n >= 2");
  const double half = static_cast<double>(h) / 2.0;
  const double dev = std::sqrt(6.0 * static_cast<double>(h) * std::log(static_cast<double>(n)));
  auto within = [&](std::size_t c) { return std::fabs(static_cast<double>(c) - half) <= dev; };
  return within(c1) && within(c2);
}

DenseResult dense_recover(EdgeOracle& oracle, const DensePlan& plan, std::uint64_t seed) {
  const std::size_t n = plan.n;
  require(oracle.num_vertices() == n, "oracle size must match the plan");
  require(plan.h >= 2 && plan.h <= n, "plan needs 2 <= h <= n");

  DenseResult res;
  res.plan = plan;
  res.labels.assign(n, kUnassigned);

  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  res.phase1_sample = sample_without_replacement(all, plan.h, Stream::derive(seed, {1}));
  const auto& sample = res.phase1_sample;
  const std::size_t h = sample.size();

  // Phase 1: probe every pair in the sample into per-row bitsets.
  const std::size_t words = (h + 63) / 64;
  std::vector<std::uint64_t> rows(h * words, 0);
  std::vector<Edge> local_edges;
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      if (oracle.query(sample[i], sample[j])) {
        rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        rows[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
        local_edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  auto local_adjacent = [&](std::size_t i, std::size_t j) {
    return (rows[i * words + j / 64] >> (j % 64)) & 1U;
  };

  const ProcessThresholds th{CountScale::kAbsolute, plan.e_s, plan.e_d};
  UnionFind uf(h);
  for (const auto& e : local_edges) {
    const std::uint64_t* a = rows.data() + e.u * words;
    const std::uint64_t* b = rows.data() + e.v * words;
    std::size_t count = 0;
    for (std::size_t w = 0; w < words; ++w) count += std::popcount(a[w] & b[w]);
    if (process_edge(count, h, th)) uf.unite(e.u, e.v);
  }
  const auto local_labels = label_two_largest(uf.canonical_ids());

  std::vector<VertexId> c1, c2;  // local indices
  for (std::size_t i = 0; i < h; ++i) {
    if (local_labels[i] == 0) c1.push_back(static_cast<VertexId>(i));
    else if (local_labels[i] == 1) c2.push_back(static_cast<VertexId>(i));
  }
  res.phase1_c1 = c1.size();
  res.phase1_c2 = c2.size();
  const std::size_t need = plan.degenerate ? 1 : plan.g;
  if (c1.size() < need || c2.size() < need) {
    throw Error(ErrorKind::kPhase1Degenerate,
                "phase 1 produced clusters of sizes " + std::to_string(c1.size()) + " and " +
                    std::to_string(c2.size()) + ", need " + std::to_string(need) + " each");
  }
  for (VertexId i : c1) res.labels[sample[i]] = 0;
  for (VertexId i : c2) res.labels[sample[i]] = 1;

  // Sampled vertices outside both clusters: their pairs with the sample are
  // already probed, so vote against the full provisional clusters.
  for (std::size_t i = 0; i < h; ++i) {
    if (local_labels[i] != kUnassigned) continue;
    std::size_t k1 = 0, k2 = 0;
    for (VertexId j : c1) k1 += local_adjacent(i, j);
    for (VertexId j : c2) k2 += local_adjacent(i, j);
    const auto vote = majority_assign(k1, k2);
    res.labels[sample[i]] = vote.cluster;
    res.ties += vote.tie;
  }

  if (!plan.degenerate) {
    // Phase 2: g probes into each provisional cluster per remaining vertex.
    auto to_global = [&](const std::vector<VertexId>& local) {
      std::vector<VertexId> out;
      out.reserve(local.size());
      for (VertexId i : local) out.push_back(sample[i]);
      return out;
    };
    const auto s1 = sample_without_replacement(to_global(c1), plan.g, Stream::derive(seed, {2}));
    const auto s2 = sample_without_replacement(to_global(c2), plan.g, Stream::derive(seed, {3}));
    std::vector<char> in_sample(n, 0);
    for (VertexId v : sample) in_sample[v] = 1;
    for (VertexId v = 0; v < n; ++v) {
      if (in_sample[v]) continue;
      std::size_t k1 = 0, k2 = 0;
      for (VertexId s : s1) k1 += oracle.query(v, s);
      for (VertexId s : s2) k2 += oracle.query(v, s);
      const auto vote = majority_assign(k1, k2);
      res.labels[v] = vote.cluster;
      res.ties += vote.tie;
    }
  }

  res.queries_used = oracle.queries();
  return res;
}

}  // namespace gbm
