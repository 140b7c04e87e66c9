#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gbm/analysis.hpp"
#include "gbm/dense.hpp"
#include "gbm/error.hpp"
#include "gbm/generators.hpp"
#include "gbm/geometry.hpp"
#include "gbm/graph_io.hpp"
#include "gbm/recovery.hpp"
#include "gbm/thresholds.hpp"

namespace py = pybind11;
using namespace gbm;

namespace {

py::array_t<double> embedding_array(const Embedding& emb) {
  if (const auto* x = std::get_if<CircleCoords>(&emb)) {
    return py::array_t<double>(static_cast<py::ssize_t>(x->size()), x->data());
  }
  const auto& s = std::get<SphereCloud>(emb);
  py::array_t<double> out({static_cast<py::ssize_t>(s.size()), static_cast<py::ssize_t>(s.width())});
  std::copy(s.raw().begin(), s.raw().end(), out.mutable_data());
  return out;
}

Embedding embedding_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a) {
  if (a.ndim() == 1) return CircleCoords(a.data(), a.data() + a.size());
  require(a.ndim() == 2 && a.shape(1) >= 2, "embedding must be 1-D or (n, t+1)");
  return SphereCloud(static_cast<int>(a.shape(1) - 1), std::vector<double>(a.data(), a.data() + a.size()));
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.num_edges());
  g.for_each_edge([&](VertexId u, VertexId v) { out.emplace_back(u, v); });
  return out;
}

Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometric block model generators, thresholds and recovery";

  static py::exception<Error> gbm_error(m, "GbmError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(gbm_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", [](const Graph& g, VertexId v) {
        auto nb = g.neighbors(v);
        return std::vector<VertexId>(nb.begin(), nb.end());
      })
      .def("edges", &edge_pairs)
      .def("fingerprint", &graph_fingerprint)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<GbmInstance>(m, "GbmInstance")
      .def_readonly("graph", &GbmInstance::graph)
      .def_property_readonly("labels", [](const GbmInstance& i) { return i.truth.label; })
      .def_property_readonly("embedding", [](const GbmInstance& i) { return embedding_array(i.embedding); })
      .def_property_readonly("t", [](const GbmInstance& i) { return i.params.t; })
      .def_property_readonly("r_s", [](const GbmInstance& i) { return i.params.r_s; })
      .def_property_readonly("r_d", [](const GbmInstance& i) { return i.params.r_d; })
      .def_property_readonly("seed", [](const GbmInstance& i) { return i.params.seed; });

  m.def("scaled_radius", &scaled_radius, py::arg("a"), py::arg("n"), py::arg("t") = 1);
  m.def(
      "gen_gbm",
      [](std::size_t n, double r_s, double r_d, std::uint64_t seed, int t) {
        return t == 1 ? gen_gbm1(n, r_s, r_d, seed) : gen_gbm_t(n, t, r_s, r_d, seed);
      },
      py::arg("n"), py::arg("r_s"), py::arg("r_d"), py::arg("seed"), py::arg("t") = 1);
  m.def(
      "gen_rag",
      [](std::size_t n, double r1, double r2, std::uint64_t seed, int t) {
        auto inst = t == 1 ? gen_rag1(n, r1, r2, seed) : gen_rag_t(n, t, r1, r2, seed);
        return py::make_tuple(inst.graph, embedding_array(inst.embedding));
      },
      py::arg("n"), py::arg("r1"), py::arg("r2"), py::arg("seed"), py::arg("t") = 1);
  m.def("write_graph", [](const Graph& g, int t) {
    std::ostringstream os;
    write_graph(os, g, t);
    return os.str();
  }, py::arg("graph"), py::arg("t") = 1);
  m.def("read_graph", [](const std::string& text) {
    std::istringstream is(text);
    auto f = read_graph(is);
    return py::make_tuple(std::move(f.graph), f.t);
  });

  m.def("cap_fraction", &cap_fraction, py::arg("t"), py::arg("r"));
  m.def("cap_intersection_fraction", &cap_intersection_fraction, py::arg("t"), py::arg("r1"),
        py::arg("r2"), py::arg("ell"));
  m.def("psi", &psi);

  py::class_<ThresholdSet1D>(m, "Thresholds1D")
      .def_readonly("n", &ThresholdSet1D::n)
      .def_readonly("a", &ThresholdSet1D::a)
      .def_readonly("b", &ThresholdSet1D::b)
      .def_readonly("f1", &ThresholdSet1D::f1)
      .def_readonly("f2", &ThresholdSet1D::f2)
      .def_readonly("theta1", &ThresholdSet1D::theta1)
      .def_readonly("theta2", &ThresholdSet1D::theta2)
      .def_readonly("e_s", &ThresholdSet1D::e_s)
      .def_readonly("e_d", &ThresholdSet1D::e_d)
      .def_readonly("recoverable", &ThresholdSet1D::recoverable);
  py::class_<ThresholdSetHD>(m, "ThresholdsHD")
      .def_readonly("cap_s", &ThresholdSetHD::cap_s)
      .def_readonly("cap_d", &ThresholdSetHD::cap_d)
      .def_readonly("overlap", &ThresholdSetHD::overlap)
      .def_readonly("e_s", &ThresholdSetHD::e_s)
      .def_readonly("e_d", &ThresholdSetHD::e_d);
  py::class_<DensePlan>(m, "DensePlan")
      .def_readonly("g", &DensePlan::g)
      .def_readonly("h", &DensePlan::h)
      .def_readonly("e_s", &DensePlan::e_s)
      .def_readonly("e_d", &DensePlan::e_d)
      .def_readonly("degenerate", &DensePlan::degenerate);

  m.def("solve_f1", &solve_f1);
  m.def("solve_f2", &solve_f2);
  m.def("thresholds_1d", &thresholds_1d, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("thresholds_hd", &thresholds_hd, py::arg("n"), py::arg("t"), py::arg("r_s"), py::arg("r_d"),
        py::arg("c_s") = 1.0, py::arg("c_d") = 1.0);
  m.def("dense_plan", &dense_plan, py::arg("n"), py::arg("t"), py::arg("r_s"), py::arg("r_d"),
        py::arg("theta_s") = 1.0, py::arg("theta_d") = 1.0);
  m.def("min_a_for_b", &min_a_for_b);
  m.def("table1", [] {
    std::vector<std::pair<double, double>> rows;
    for (double b : table1_b_values()) rows.emplace_back(b, min_a_for_b(b));
    return rows;
  });

  py::class_<RecoveryStats>(m, "RecoveryStats")
      .def_readonly("edges_total", &RecoveryStats::edges_total)
      .def_readonly("edges_removed", &RecoveryStats::edges_removed)
      .def_readonly("edges_examined", &RecoveryStats::edges_examined)
      .def_readonly("components", &RecoveryStats::components_count);
  py::class_<RecoveryResult>(m, "RecoveryResult")
      .def_readonly("labels", &RecoveryResult::labels)
      .def_readonly("components", &RecoveryResult::components)
      .def_readonly("stats", &RecoveryResult::stats);

  m.def("common_neighbor_count", &common_neighbor_count);
  m.def(
      "recover_gbm1",
      [](const Graph& g, double a, double b, bool fast_mode) {
        return recover_gbm1(g, a, b, {.fast_mode = fast_mode, .keep_decisions = false});
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("fast_mode") = false);
  m.def(
      "recover_gbm_hd",
      [](const Graph& g, int t, double r_s, double r_d, double c_s, double c_d, bool fast_mode) {
        return recover_gbm_hd(g, t, r_s, r_d, c_s, c_d, {.fast_mode = fast_mode, .keep_decisions = false});
      },
      py::arg("graph"), py::arg("t"), py::arg("r_s"), py::arg("r_d"), py::arg("c_s") = 1.0,
      py::arg("c_d") = 1.0, py::arg("fast_mode") = false);
  m.def(
      "recover_with_locations",
      [](const Graph& g, py::array_t<double, py::array::c_style | py::array::forcecast> emb, double r_s,
         double r_d) {
        const auto e = embedding_from_array(emb);
        const auto res = std::visit([&](const auto& x) { return recover_with_locations(g, x, r_s, r_d); }, e);
        py::dict d;
        d["labels"] = res.labels;
        d["conflict"] = res.conflict;
        d["constraint_components"] = res.constraint_components;
        d["constrained_pairs"] = res.constrained_pairs;
        return d;
      },
      py::arg("graph"), py::arg("embedding"), py::arg("r_s"), py::arg("r_d"));

  m.def(
      "dense_recover",
      [](std::size_t n, int t, double r_s, double r_d, std::uint64_t seed, double theta_s,
         double theta_d) {
        const auto truth = balanced_truth(n);
        const Embedding emb = t == 1 ? Embedding(sample_circle(seed, n)) : Embedding(sample_sphere(seed, n, t));
        EdgeOracle oracle(n, gbm_adjacency(emb, truth.label, r_s, r_d));
        const auto plan = dense_plan(n, t, r_s, r_d, theta_s, theta_d);
        DenseResult res;
        {
          py::gil_scoped_release release;
          res = dense_recover(oracle, plan, seed);
        }
        py::dict d;
        d["labels"] = res.labels;
        d["truth"] = truth.label;
        d["queries_used"] = res.queries_used;
        d["fraction_probed"] = double(res.queries_used) / (double(n) * double(n - 1) / 2.0);
        d["plan"] = plan;
        d["phase1_sizes"] = py::make_tuple(res.phase1_c1, res.phase1_c2);
        d["ties"] = res.ties;
        return d;
      },
      py::arg("n"), py::arg("t"), py::arg("r_s"), py::arg("r_d"), py::arg("seed"),
      py::arg("theta_s") = 1.0, py::arg("theta_d") = 1.0);

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("precision", &Metrics::precision)
      .def_readonly("recall", &Metrics::recall)
      .def_readonly("f_score", &Metrics::f_score)
      .def_readonly("node_error_rate", &Metrics::node_error_rate);
  m.def("pair_f_score", [](const std::vector<int>& p, const std::vector<int>& t) { return pair_f_score(p, t); });
  m.def("node_error_rate", [](const std::vector<int>& p, const std::vector<int>& t) { return node_error_rate(p, t); });
  m.def("component_count", &component_count);
  m.def("isolated_count", &isolated_count);
  m.def("isolated_expectation_1d", &isolated_expectation_1d);

  py::class_<PhasePoint>(m, "PhasePoint")
      .def_readonly("a", &PhasePoint::a)
      .def_readonly("b", &PhasePoint::b)
      .def_readonly("trials", &PhasePoint::trials)
      .def_readonly("connected_frac", &PhasePoint::connected_frac)
      .def_readonly("isolated_frac", &PhasePoint::isolated_frac)
      .def_readonly("mean_components", &PhasePoint::mean_components);
  m.def(
      "phase_sweep",
      [](std::size_t n, const std::vector<std::pair<double, double>>& grid, std::size_t trials,
         std::uint64_t seed, const std::string& family, int t, double c, unsigned jobs) {
        SweepSpec spec;
        spec.n = n;
        spec.trials = trials;
        spec.seed = seed;
        spec.t = t;
        spec.c = c;
        spec.jobs = jobs;
        if (family == "rag1") spec.family = SweepFamily::kRag1;
        else if (family == "ragt") spec.family = SweepFamily::kRagT;
        else if (family == "interval") spec.family = SweepFamily::kIntervalUnion;
        else throw Error(ErrorKind::kInvalidArgument, "family must be rag1, ragt or interval");
        std::vector<GridPoint> pts;
        for (auto [a, b] : grid) pts.push_back({a, b});
        py::gil_scoped_release release;
        return phase_sweep(spec, pts);
      },
      py::arg("n"), py::arg("grid"), py::arg("trials"), py::arg("seed"), py::arg("family") = "rag1",
      py::arg("t") = 1, py::arg("c") = 0.0, py::arg("jobs") = 1);
}
