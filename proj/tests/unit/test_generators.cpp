#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gbm/error.hpp"
#include "gbm/generators.hpp"
#include "gbm/graph_io.hpp"

using namespace gbm;

namespace {

void check_graph_invariants(const Graph& g) {
  std::size_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    total += nb.size();
    REQUIRE(std::adjacent_find(nb.begin(), nb.end(), [](auto a, auto b) { return a >= b; }) == nb.end());
    for (VertexId w : nb) {
      REQUIRE(w != v);
      REQUIRE(g.has_edge(w, v));
    }
  }
  CHECK(total == 2 * g.num_edges());
}

double pairs(std::size_t n) { return static_cast<double>(n) * (n - 1) / 2.0; }

}  // namespace

TEST_CASE("graph builder normalizes and rejects bad input") {
  auto g = Graph::from_edges(4, {{2, 1}, {1, 2}, {0, 3}, {3, 1}});
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}});
  check_graph_invariants(g);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
}

TEST_CASE("GBM1 edges satisfy the distance rule exactly") {
  const std::size_t n = 3000;
  const auto inst = gen_gbm1(n, scaled_radius_1d(9, n), scaled_radius_1d(1, n), 5);
  check_graph_invariants(inst.graph);
  CHECK(recheck_gbm(inst, 100000, 1));
  CHECK(inst.truth.label[0] == 0);
  CHECK(inst.truth.label[n / 2 - 1] == 0);
  CHECK(inst.truth.label[n / 2] == 1);

  // A tampered graph fails the recheck.
  auto edges = inst.graph.edges();
  edges.pop_back();
  auto broken = inst;
  broken.graph = Graph::from_edges(n, edges);
  CHECK_FALSE(recheck_gbm(broken, n * (n - 1) / 2, 1));
}

TEST_CASE("GBM with r_d = r_s degenerates to a random annulus graph") {
  const std::size_t n = 2000;
  const double r = scaled_radius_1d(4, n);
  const auto inst = gen_gbm1(n, r, r, 9);
  CHECK(inst.graph == build_rag1(std::get<CircleCoords>(inst.embedding), 0.0, r));

  const auto hd = gen_gbm_t(n, 2, 0.3, 0.3, 9);
  CHECK(hd.graph == build_rag_t(std::get<SphereCloud>(hd.embedding), 0.0, 0.3));
}

TEST_CASE("GBM1 mean degree matches the definitional expectation") {
  const std::size_t n = 5000;
  const double a = 9, b = 2;
  const double rs = scaled_radius_1d(a, n), rd = scaled_radius_1d(b, n);
  double mean_degree = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto inst = gen_gbm1(n, rs, rd, 1000 + s);
    mean_degree += 2.0 * inst.graph.num_edges() / n;
  }
  mean_degree /= 50;
  const double expected = (n / 2.0 - 1) * 2 * rs + (n / 2.0) * 2 * rd;
  CHECK(std::fabs(mean_degree - expected) <= 0.1 * expected);
  CHECK(std::fabs(mean_degree - (a + b) * std::log(double(n))) <= 0.1 * expected);
}

TEST_CASE("RAG1 edge probability per pair is 2(r2 - r1)") {
  const std::size_t n = 10000;
  const double r1 = scaled_radius_1d(0.3, n), r2 = scaled_radius_1d(1.0, n);
  const auto rag = gen_rag1(n, r1, r2, 21);
  check_graph_invariants(rag.graph);
  const double p = 2 * (r2 - r1);
  const double mean = pairs(n) * p, sd = std::sqrt(pairs(n) * p * (1 - p));
  CHECK(std::fabs(rag.graph.num_edges() - mean) <= 3 * sd);

  CHECK(gen_rag1(500, 0.1, 0.1, 3).graph.num_edges() == 0);
  CHECK_THROWS_AS(gen_rag1(100, 0.2, 0.1, 3), Error);
  CHECK_THROWS_AS(gen_rag1(100, 0.1, 0.6, 3), Error);
}

TEST_CASE("RAG1 equals the chord-threshold Euclidean graph on the same points") {
  const std::size_t n = 4000;
  const auto x = sample_circle(77, n);
  const auto emb = embed_circle(x);
  for (auto [lo, hi] : {std::pair{0.0, 0.01}, {0.002, 0.006}, {0.1, 0.5}}) {
    CHECK(build_rag1(x, lo, hi) == build_rag_t(emb, chord_of_geodesic(lo), chord_of_geodesic(hi)));
  }
}

TEST_CASE("RAG_t on the sphere") {
  const auto full = gen_rag_t(300, 3, 0.0, 2.0, 4);
  CHECK(full.graph.num_edges() == 300 * 299 / 2);
  CHECK(gen_rag_t(300, 2, 0.7, 0.7, 4).graph.num_edges() == 0);

  const std::size_t n = 5000;
  const double r1 = 0.05, r2 = 0.12;
  const auto rag = gen_rag_t(n, 2, r1, r2, 8);
  check_graph_invariants(rag.graph);
  const double p = annulus_fraction(2, r1, r2);
  const double mean = pairs(n) * p, sd = std::sqrt(pairs(n) * p * (1 - p));
  CHECK(std::fabs(rag.graph.num_edges() - mean) <= 3 * sd);
  CHECK_THROWS_AS(gen_rag_t(10, 0, 0.1, 0.2, 1), Error);
}

TEST_CASE("GBM_t intra- and inter-cluster edge frequencies") {
  const std::size_t n = 5000;
  const double rs = 0.15, rd = 0.06;
  const auto inst = gen_gbm_t(n, 2, rs, rd, 13);
  CHECK(recheck_gbm(inst, 100000, 2));
  std::size_t intra = 0, inter = 0;
  inst.graph.for_each_edge([&](VertexId u, VertexId v) {
    (inst.truth.label[u] == inst.truth.label[v] ? intra : inter) += 1;
  });
  const double intra_pairs = 2 * pairs(n / 2), inter_pairs = (n / 2.0) * (n / 2.0);
  const double ps = cap_fraction(2, rs), pd = cap_fraction(2, rd);
  CHECK(std::fabs(intra - intra_pairs * ps) <= 4 * std::sqrt(intra_pairs * ps * (1 - ps)));
  CHECK(std::fabs(inter - inter_pairs * pd) <= 4 * std::sqrt(inter_pairs * pd * (1 - pd)));
  CHECK_THROWS_AS(gen_gbm_t(101, 2, rs, rd, 1), Error);
  CHECK_THROWS_AS(gen_gbm_t(100, 2, rd, rs, 1), Error);
}

TEST_CASE("interval-union graphs") {
  const std::size_t n = 3000;
  const auto x = sample_circle(31, n);
  CHECK(build_interval_union(x, IntervalSet({{0.0, 0.004}})) == build_rag1(x, 0.0, 0.004));
  CHECK(build_interval_union(x, IntervalSet({{0.003, 0.006}})) == build_rag1(x, 0.003, 0.006));

  const auto small = gen_interval_union_graph(200, IntervalSet({{0.0, 0.2}, {0.25, 0.5}}), 3);
  const auto cover = gen_interval_union_graph(200, IntervalSet({{0.0, 0.5}}), 3);
  CHECK(cover.graph.num_edges() == 200 * 199 / 2);
  CHECK(small.graph.num_edges() < cover.graph.num_edges());

  const std::size_t big = 10000;
  const double L = std::log(double(big)) / big;
  const IntervalSet ivs({{0.0, 0.4 * L}, {1.0 * L, 1.5 * L}});
  const auto g = gen_interval_union_graph(big, ivs, 17);
  const double p = 2 * ivs.total_length();
  CHECK(std::fabs(g.graph.num_edges() - pairs(big) * p) <= 3 * std::sqrt(pairs(big) * p * (1 - p)));

  CHECK_THROWS_AS(IntervalSet({{0.1, 0.05}}), Error);
  CHECK_THROWS_AS(IntervalSet({{0.0, 0.2}, {0.1, 0.3}}), Error);
  CHECK_THROWS_AS(IntervalSet({{0.0, 0.6}}), Error);
}

TEST_CASE("generators are deterministic per seed") {
  const auto a = gen_gbm1(2000, 0.02, 0.005, 123);
  const auto b = gen_gbm1(2000, 0.02, 0.005, 123);
  const auto c = gen_gbm1(2000, 0.02, 0.005, 124);
  CHECK(a.graph == b.graph);
  CHECK(graph_fingerprint(a.graph) == graph_fingerprint(b.graph));
  CHECK(graph_fingerprint(a.graph) != graph_fingerprint(c.graph));
  CHECK(std::get<CircleCoords>(a.embedding) == std::get<CircleCoords>(b.embedding));
  CHECK_THROWS_AS(gen_gbm1(2001, 0.02, 0.005, 1), Error);
  CHECK_THROWS_AS(gen_gbm1(2000, 0.005, 0.02, 1), Error);
}

TEST_CASE("scaled radii") {
  CHECK(scaled_radius_1d(2.0, 1000) == doctest::Approx(2.0 * std::log(1000.0) / 1000.0));
  CHECK(scaled_radius(2.0, 1000, 2) == doctest::Approx(2.0 * std::sqrt(std::log(1000.0) / 1000.0)));
  CHECK(scaled_radius(2.0, 1000, 1) == doctest::Approx(scaled_radius_1d(2.0, 1000)));
}
