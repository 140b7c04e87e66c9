// gbm-lab: seeded experiments on geometric block models from the command line.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbm/analysis.hpp"
#include "gbm/dense.hpp"
#include "gbm/error.hpp"
#include "gbm/generators.hpp"
#include "gbm/graph_io.hpp"
#include "gbm/recovery.hpp"
#include "gbm/thresholds.hpp"
#include "json.hpp"

#ifndef GBM_LAB_VERSION
#define GBM_LAB_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;
using namespace gbm;

constexpr const char* kSchema = "gbm-lab/1";
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

// Radii given either scaled (--a/--b) or raw (--rs/--rd).
struct RadiusArgs {
  std::optional<double> a, b, rs, rd;

  void add_to(CLI::App& cmd, bool required = true) {
    auto* oa = cmd.add_option("--a", a, "Scaled same-cluster (outer) radius");
    auto* ob = cmd.add_option("--b", b, "Scaled cross-cluster (inner) radius");
    auto* ors = cmd.add_option("--rs", rs, "Raw same-cluster (outer) radius");
    auto* ord = cmd.add_option("--rd", rd, "Raw cross-cluster (inner) radius");
    oa->excludes(ors)->excludes(ord)->needs(ob);
    ob->excludes(ors)->excludes(ord)->needs(oa);
    ors->needs(ord);
    ord->needs(ors);
    if (required) {
      cmd.callback([this] {
        if (!a && !rs) throw CLI::RequiredError("--a/--b or --rs/--rd");
      });
    }
  }

  bool given() const { return a.has_value() || rs.has_value(); }

  // Fills all four values for an n-vertex instance on S^t.
  void resolve(std::size_t n, int t) {
    const double unit = t == 1 ? std::log(double(n)) / double(n)
                               : std::pow(std::log(double(n)) / double(n), 1.0 / t);
    if (a) {
      rs = *a * unit;
      rd = *b * unit;
    } else {
      a = *rs / unit;
      b = *rd / unit;
    }
  }

  ordered_json to_json() const {
    return {{"a", *a}, {"b", *b}, {"r_s", *rs}, {"r_d", *rd}};
  }
};

ordered_json record(const std::string& command, ordered_json config) {
  ordered_json j;
  j["schema"] = kSchema;
  j["version"] = GBM_LAB_VERSION;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    save_text(path, text);
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// CSV output keeps a bare header so standard readers work; the run record
// goes to a sidecar next to the file.
void emit_csv(const std::string& path, const std::string& csv, const ordered_json& meta) {
  emit(path, csv);
  if (path != "-") save_text(path + ".meta.json", dump(meta));
}

GraphFile load_graph(const std::string& path) {
  std::istringstream is(load_text(path));
  return read_graph(is);
}

std::vector<int> load_labels(const std::string& path) {
  const std::string text = load_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = ordered_json::parse(text);
    require(j.contains("labels"), "JSON label file has no \"labels\" array");
    return j["labels"].get<std::vector<int>>();
  }
  std::istringstream is(text);
  return read_labels(is);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

ordered_json decisions_summary(const RecoveryStats& s) {
  return {{"edges_total", s.edges_total},
          {"edges_removed", s.edges_removed},
          {"edges_examined", s.edges_examined},
          {"components", s.components_count}};
}

void write_decisions(const std::string& path, const std::vector<EdgeDecision>& decisions) {
  std::string out = "u,v,count,kept\n";
  for (const auto& d : decisions) {
    out += std::to_string(d.u) + ',' + std::to_string(d.v) + ',' + std::to_string(d.count) + ',' +
           (d.kept ? "1" : "0") + '\n';
  }
  emit(path, out);
}

ordered_json nullable(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json thresholds_json(const ThresholdSet1D& th) {
  const double n = double(th.n);
  return {{"n", th.n},
          {"a", th.a},
          {"b", th.b},
          {"f1", th.f1},
          {"f2", nullable(th.f2)},
          {"theta1", th.theta1},
          {"theta2", th.theta2},
          {"e_s", th.e_s},
          {"e_d", nullable(th.e_d)},
          {"e_s_count", th.e_s * n},
          {"e_d_count", th.e_d ? ordered_json(*th.e_d * n) : ordered_json(nullptr)},
          {"recoverable", th.recoverable}};
}

ordered_json thresholds_json(const ThresholdSetHD& th) {
  return {{"n", th.n},         {"t", th.t},          {"r_s", th.r_s},
          {"r_d", th.r_d},     {"c_s", th.c_s},      {"c_d", th.c_d},
          {"cap_s", th.cap_s}, {"cap_d", th.cap_d},  {"overlap", th.overlap},
          {"e_s", th.e_s},     {"e_d", th.e_d}};
}

ordered_json plan_json(const DensePlan& p) {
  return {{"n", p.n},         {"t", p.t},         {"r_s", p.r_s},
          {"r_d", p.r_d},     {"theta_s", p.theta_s}, {"theta_d", p.theta_d},
          {"g", p.g},         {"h", p.h},         {"e_s", p.e_s},
          {"e_d", p.e_d},     {"degenerate", p.degenerate}};
}

ordered_json metrics_json(const Metrics& m) {
  return {{"precision", m.precision},
          {"recall", m.recall},
          {"f_score", m.f_score},
          {"node_error_rate", m.node_error_rate}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric block model experiments", "gbm-lab"};
  app.set_version_flag("--version", std::string("gbm-lab ") + GBM_LAB_VERSION);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a GBM or random annulus graph");
  std::size_t gen_n = 0;
  int gen_t = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-", gen_family = "gbm", gen_emb, gen_truth;
  RadiusArgs gen_r;
  gen->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::Range(2, 1 << 30));
  gen->add_option("--t", gen_t, "Sphere dimension (1 = circle)")->check(CLI::Range(1, 64));
  gen_r.add_to(*gen);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--family", gen_family, "gbm or rag (annulus [b, a])")
      ->check(CLI::IsMember({"gbm", "rag"}));
  gen->add_option("--out", gen_out, "Graph file, or - for stdout");
  gen->add_option("--emb", gen_emb, "Embedding sidecar (default <out>.emb)");
  gen->add_option("--truth", gen_truth, "Ground-truth sidecar (default <out>.truth)");

  // thresholds
  auto* thr = app.add_subcommand("thresholds", "Filter thresholds for given parameters");
  std::size_t thr_n = 0;
  int thr_t = 1;
  double thr_cs = 1.0, thr_cd = 1.0;
  std::string thr_out = "-";
  RadiusArgs thr_r;
  thr->add_option("--n", thr_n, "Number of vertices")->required()->check(CLI::Range(3, 1 << 30));
  thr->add_option("--t", thr_t, "Sphere dimension")->check(CLI::Range(1, 64));
  thr_r.add_to(*thr);
  thr->add_option("--cs", thr_cs, "Upper threshold constant (t > 1)");
  thr->add_option("--cd", thr_cd, "Lower threshold constant (t > 1)");
  thr->add_option("--out", thr_out, "Output path or -");

  // table1
  auto* tab = app.add_subcommand("table1", "Minimum a for each tabulated b");
  std::string tab_out = "-", tab_format = "csv";
  tab->add_option("--out", tab_out, "Output path or -");
  tab->add_option("--format", tab_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // recover / recover-hd
  struct RecoverArgs {
    std::string graph, out = "-", decisions, labels_out, truth;
    RadiusArgs r;
    bool fast = false;
    double cs = 1.0, cd = 1.0;
  };
  RecoverArgs rec, rhd;
  auto add_recover = [](CLI::App* cmd, RecoverArgs& args) {
    cmd->add_option("--graph", args.graph, "Graph file")->required()->check(CLI::ExistingFile);
    args.r.add_to(*cmd);
    cmd->add_option("--out", args.out, "Result JSON path or -");
    cmd->add_option("--decisions", args.decisions, "Per-edge decision CSV path");
    cmd->add_option("--labels-out", args.labels_out, "Write labels, one per line");
    cmd->add_option("--truth", args.truth, "Ground truth; adds metrics to the result")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--fast-mode", args.fast, "Skip edges inside already-joined components");
  };
  auto* recover = app.add_subcommand("recover", "Triangle-filter recovery on a circle GBM graph");
  add_recover(recover, rec);
  auto* recover_hd = app.add_subcommand("recover-hd", "Triangle-filter recovery on a sphere GBM graph");
  add_recover(recover_hd, rhd);
  recover_hd->add_option("--cs", rhd.cs, "Upper threshold constant");
  recover_hd->add_option("--cd", rhd.cd, "Lower threshold constant");

  // recover-loc
  auto* loc = app.add_subcommand("recover-loc", "Recovery with known vertex positions");
  std::string loc_graph, loc_emb, loc_out = "-", loc_labels_out, loc_truth;
  RadiusArgs loc_r;
  loc->add_option("--graph", loc_graph, "Graph file")->required()->check(CLI::ExistingFile);
  loc->add_option("--embedding", loc_emb, "Embedding sidecar")->required()->check(CLI::ExistingFile);
  loc_r.add_to(*loc);
  loc->add_option("--out", loc_out, "Result JSON path or -");
  loc->add_option("--labels-out", loc_labels_out, "Write labels, one per line");
  loc->add_option("--truth", loc_truth, "Ground truth; adds metrics")->check(CLI::ExistingFile);

  // dense
  auto* dense = app.add_subcommand("dense", "Two-phase query-efficient recovery");
  std::size_t dn_n = 0;
  int dn_t = 2;
  double dn_rs = 0, dn_rd = 0, dn_ts = 1.0, dn_td = 1.0;
  std::uint64_t dn_seed = 1;
  std::optional<std::uint64_t> dn_instance_seed;
  std::string dn_out = "-", dn_graph, dn_truth;
  bool dn_no_labels = false;
  dense->add_option("--n", dn_n, "Number of vertices (sampled instance)")->check(CLI::Range(4, 1 << 30));
  dense->add_option("--t", dn_t, "Sphere dimension")->check(CLI::Range(1, 64));
  dense->add_option("--rs", dn_rs, "Same-cluster radius")->required();
  dense->add_option("--rd", dn_rd, "Cross-cluster radius")->required();
  dense->add_option("--seed", dn_seed, "Seed for the algorithm's sampling");
  dense->add_option("--instance-seed", dn_instance_seed, "Seed for the sampled instance (default --seed)");
  dense->add_option("--theta-s", dn_ts, "Upper threshold constant");
  dense->add_option("--theta-d", dn_td, "Lower threshold constant");
  dense->add_option("--graph", dn_graph, "Probe a stored graph instead of sampling one")
      ->check(CLI::ExistingFile);
  dense->add_option("--truth", dn_truth, "Ground truth for a stored graph")->check(CLI::ExistingFile);
  dense->add_flag("--no-labels", dn_no_labels, "Omit the label array from the output");
  dense->add_option("--out", dn_out, "Result JSON path or -");

  // phase
  auto* phase = app.add_subcommand("phase", "Monte-Carlo connectivity sweep over (a, b)");
  std::size_t ph_n = 0, ph_trials = 20;
  int ph_t = 1;
  double ph_c = 0.0;
  unsigned ph_jobs = 1;
  std::uint64_t ph_seed = 1;
  std::vector<double> ph_a, ph_b;
  std::string ph_family = "rag1", ph_out = "-", ph_format = "csv";
  phase->add_option("--n", ph_n, "Number of vertices")->required()->check(CLI::Range(2, 1 << 30));
  phase->add_option("--family", ph_family, "rag1, ragt or interval")
      ->check(CLI::IsMember({"rag1", "ragt", "interval"}));
  phase->add_option("--t", ph_t, "Sphere dimension for ragt")->check(CLI::Range(1, 64));
  phase->add_option("--c", ph_c, "Scaled short-range band [0, c] for interval");
  phase->add_option("--a", ph_a, "Outer scaled radii (comma separated)")->required()->delimiter(',');
  phase->add_option("--b", ph_b, "Inner scaled radii (comma separated)")->required()->delimiter(',');
  phase->add_option("--trials", ph_trials, "Trials per grid point")->check(CLI::PositiveNumber);
  phase->add_option("--seed", ph_seed, "Master seed");
  phase->add_option("--jobs", ph_jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  phase->add_option("--out", ph_out, "Output path or -");
  phase->add_option("--format", ph_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // eval
  auto* eval = app.add_subcommand("eval", "Compare predicted labels with ground truth");
  std::string ev_labels, ev_truth, ev_out = "-";
  eval->add_option("--labels", ev_labels, "Labels (one per line, or a recover JSON)")
      ->required()->check(CLI::ExistingFile);
  eval->add_option("--truth", ev_truth, "Ground truth labels")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", ev_out, "Output path or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      gen_r.resolve(gen_n, gen_t);
      ordered_json cfg{{"n", gen_n}, {"t", gen_t}, {"family", gen_family}, {"seed", gen_seed}};
      cfg["radii"] = gen_r.to_json();
      Embedding emb;
      std::optional<GroundTruth> truth;
      Graph g;
      if (gen_family == "gbm") {
        auto inst = gen_t == 1 ? gen_gbm1(gen_n, *gen_r.rs, *gen_r.rd, gen_seed)
                               : gen_gbm_t(gen_n, gen_t, *gen_r.rs, *gen_r.rd, gen_seed);
        g = std::move(inst.graph);
        emb = std::move(inst.embedding);
        truth = std::move(inst.truth);
      } else {
        auto inst = gen_t == 1 ? gen_rag1(gen_n, *gen_r.rd, *gen_r.rs, gen_seed)
                               : gen_rag_t(gen_n, gen_t, *gen_r.rd, *gen_r.rs, gen_seed);
        g = std::move(inst.graph);
        emb = std::move(inst.embedding);
      }
      std::ostringstream gs;
      write_graph(gs, g, gen_t);
      emit(gen_out, gs.str());
      if (gen_emb.empty() && gen_out != "-") gen_emb = gen_out + ".emb";
      if (gen_truth.empty() && gen_out != "-") gen_truth = gen_out + ".truth";
      if (!gen_emb.empty()) {
        std::ostringstream es;
        write_embedding(es, emb);
        save_text(gen_emb, es.str());
      }
      if (!gen_truth.empty() && truth) {
        std::ostringstream ts;
        write_labels(ts, truth->label);
        save_text(gen_truth, ts.str());
      }
      if (gen_out != "-") {
        auto meta = record("gen", cfg);
        meta["graph"] = {{"n", g.num_vertices()},
                         {"m", g.num_edges()},
                         {"fingerprint", graph_fingerprint(g)}};
        save_text(gen_out + ".json", dump(meta));
      }
      return 0;
    }

    if (*thr) {
      thr_r.resolve(thr_n, thr_t);
      ordered_json cfg{{"n", thr_n}, {"t", thr_t}, {"c_s", thr_cs}, {"c_d", thr_cd}};
      cfg["radii"] = thr_r.to_json();
      auto out = record("thresholds", cfg);
      if (thr_t == 1) {
        out["thresholds"] = thresholds_json(thresholds_1d(thr_n, *thr_r.a, *thr_r.b));
      } else {
        out["thresholds"] =
            thresholds_json(thresholds_hd(thr_n, thr_t, *thr_r.rs, *thr_r.rd, thr_cs, thr_cd));
      }
      emit(thr_out, dump(out));
      return 0;
    }

    if (*tab) {
      auto meta = record("table1", {{"format", tab_format}});
      ordered_json rows = ordered_json::array();
      std::string csv = "b,min_a\n";
      for (double b : table1_b_values()) {
        const double a = min_a_for_b(b);
        rows.push_back({{"b", b}, {"min_a", a}});
        csv += fmt(b) + ',' + fmt(a) + '\n';
      }
      if (tab_format == "json") {
        meta["rows"] = rows;
        emit(tab_out, dump(meta));
      } else {
        emit_csv(tab_out, csv, meta);
      }
      return 0;
    }

    if (*recover || *recover_hd) {
      const bool hd = recover_hd->parsed();
      auto& args = hd ? rhd : rec;
      const auto file = load_graph(args.graph);
      const std::size_t n = file.graph.num_vertices();
      if (!hd && file.t != 1) {
        throw Error(ErrorKind::kInvalidArgument, "graph has t > 1; use recover-hd");
      }
      if (hd && file.t == 1) {
        throw Error(ErrorKind::kInvalidArgument, "graph has t = 1; use recover");
      }
      args.r.resolve(n, file.t);
      ordered_json cfg{{"graph", args.graph}, {"fast_mode", args.fast}};
      cfg["radii"] = args.r.to_json();
      if (hd) {
        cfg["c_s"] = args.cs;
        cfg["c_d"] = args.cd;
      }
      auto out = record(hd ? "recover-hd" : "recover", cfg);
      const FilterOptions opts{.fast_mode = args.fast, .keep_decisions = !args.decisions.empty()};
      RecoveryResult res;
      if (hd) {
        const auto th = thresholds_hd(n, file.t, *args.r.rs, *args.r.rd, args.cs, args.cd);
        out["thresholds"] = thresholds_json(th);
        res = filter_and_cluster(file.graph, process_thresholds(th), opts);
      } else {
        const auto th = thresholds_1d(n, *args.r.a, *args.r.b);
        out["thresholds"] = thresholds_json(th);
        res = filter_and_cluster(file.graph, process_thresholds(th), opts);
      }
      out["params"] = {{"n", n},
                       {"m", file.graph.num_edges()},
                       {"t", file.t},
                       {"graph_fingerprint", graph_fingerprint(file.graph)},
                       {"cluster_rule", "two-largest-components"}};
      out["stats"] = decisions_summary(res.stats);
      if (!args.truth.empty()) {
        out["metrics"] = metrics_json(pair_f_score(res.labels, load_labels(args.truth)));
      }
      out["labels"] = res.labels;
      if (!args.decisions.empty()) write_decisions(args.decisions, res.decisions);
      if (!args.labels_out.empty()) {
        std::ostringstream ls;
        write_labels(ls, res.labels);
        save_text(args.labels_out, ls.str());
      }
      emit(args.out, dump(out));
      return 0;
    }

    if (*loc) {
      const auto file = load_graph(loc_graph);
      const std::size_t n = file.graph.num_vertices();
      std::istringstream es(load_text(loc_emb));
      const auto emb = read_embedding(es, file.t);
      loc_r.resolve(n, file.t);
      ordered_json cfg{{"graph", loc_graph}, {"embedding", loc_emb}};
      cfg["radii"] = loc_r.to_json();
      auto out = record("recover-loc", cfg);
      const auto res = std::visit(
          [&](const auto& e) { return recover_with_locations(file.graph, e, *loc_r.rs, *loc_r.rd); },
          emb);
      std::size_t assigned = 0;
      for (int l : res.labels) assigned += l != kUnassigned;
      out["params"] = {{"n", n}, {"m", file.graph.num_edges()}, {"t", file.t},
                       {"graph_fingerprint", graph_fingerprint(file.graph)}};
      out["result"] = {{"conflict", res.conflict},
                       {"constraint_components", res.constraint_components},
                       {"constrained_pairs", res.constrained_pairs},
                       {"assigned", assigned}};
      if (!loc_truth.empty()) {
        out["metrics"] = metrics_json(pair_f_score(res.labels, load_labels(loc_truth)));
      }
      out["labels"] = res.labels;
      if (!loc_labels_out.empty()) {
        std::ostringstream ls;
        write_labels(ls, res.labels);
        save_text(loc_labels_out, ls.str());
      }
      emit(loc_out, dump(out));
      return 0;
    }

    if (*dense) {
      ordered_json cfg{{"t", dn_t},         {"r_s", dn_rs},         {"r_d", dn_rd},
                       {"seed", dn_seed},   {"theta_s", dn_ts},     {"theta_d", dn_td}};
      std::optional<GraphFile> file;
      std::optional<GroundTruth> truth;
      Embedding emb;
      std::unique_ptr<EdgeOracle> oracle;
      if (!dn_graph.empty()) {
        file = load_graph(dn_graph);
        dn_n = file->graph.num_vertices();
        dn_t = file->t;
        cfg["graph"] = dn_graph;
        cfg["t"] = dn_t;
        if (!dn_truth.empty()) truth = GroundTruth{load_labels(dn_truth)};
        oracle = std::make_unique<EdgeOracle>(file->graph);
      } else {
        if (dn_n == 0) throw Error(ErrorKind::kInvalidArgument, "dense needs --n or --graph");
        const std::uint64_t iseed = dn_instance_seed.value_or(dn_seed);
        cfg["instance_seed"] = iseed;
        truth = balanced_truth(dn_n);
        if (dn_t == 1) emb = sample_circle(iseed, dn_n);
        else emb = sample_sphere(iseed, dn_n, dn_t);
        oracle = std::make_unique<EdgeOracle>(dn_n, gbm_adjacency(emb, truth->label, dn_rs, dn_rd));
      }
      cfg["n"] = dn_n;
      auto out = record("dense", cfg);
      const auto plan = dense_plan(dn_n, dn_t, dn_rs, dn_rd, dn_ts, dn_td);
      out["plan"] = plan_json(plan);
      const auto res = dense_recover(*oracle, plan, dn_seed);
      const double total = double(dn_n) * double(dn_n - 1) / 2.0;
      out["queries_used"] = res.queries_used;
      out["total_pairs"] = static_cast<std::uint64_t>(total);
      out["fraction_probed"] = double(res.queries_used) / total;
      out["phase1"] = {{"c1", res.phase1_c1},
                       {"c2", res.phase1_c2},
                       {"balanced", phase1_balance_check(plan.h, res.phase1_c1,
                                                          plan.h - res.phase1_c1, dn_n)}};
      out["ties"] = res.ties;
      if (truth) out["metrics"] = metrics_json(pair_f_score(res.labels, truth->label));
      if (!dn_no_labels) out["labels"] = res.labels;
      emit(dn_out, dump(out));
      return 0;
    }

    if (*phase) {
      SweepSpec spec;
      spec.n = ph_n;
      spec.family = ph_family == "rag1"   ? SweepFamily::kRag1
                    : ph_family == "ragt" ? SweepFamily::kRagT
                                          : SweepFamily::kIntervalUnion;
      spec.t = ph_t;
      spec.c = ph_c;
      spec.trials = ph_trials;
      spec.seed = ph_seed;
      spec.jobs = ph_jobs;
      std::vector<GridPoint> grid;
      for (double a : ph_a)
        for (double b : ph_b)
          if (a >= b) grid.push_back({a, b});
      require(!grid.empty(), "no grid point with a >= b");
      const auto points = phase_sweep(spec, grid);
      // jobs does not affect results, so it stays out of the record.
      auto meta = record("phase", {{"n", ph_n},
                                   {"family", ph_family},
                                   {"t", ph_t},
                                   {"c", ph_c},
                                   {"a", ph_a},
                                   {"b", ph_b},
                                   {"trials", ph_trials},
                                   {"seed", ph_seed}});
      if (ph_format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& p : points) {
          rows.push_back({{"a", p.a},
                          {"b", p.b},
                          {"trials", p.trials},
                          {"connected_frac", p.connected_frac},
                          {"isolated_frac", p.isolated_frac},
                          {"mean_components", p.mean_components},
                          {"mean_isolated", p.mean_isolated}});
        }
        meta["points"] = rows;
        emit(ph_out, dump(meta));
      } else {
        std::string csv = "a,b,trials,connected_frac,isolated_frac,mean_components\n";
        for (const auto& p : points) {
          csv += fmt(p.a) + ',' + fmt(p.b) + ',' + std::to_string(p.trials) + ',' +
                 fmt(p.connected_frac) + ',' + fmt(p.isolated_frac) + ',' +
                 fmt(p.mean_components) + '\n';
        }
        emit_csv(ph_out, csv, meta);
      }
      return 0;
    }

    if (*eval) {
      const auto pred = load_labels(ev_labels);
      const auto truth = load_labels(ev_truth);
      auto out = record("eval", {{"labels", ev_labels}, {"truth", ev_truth}});
      out["n"] = truth.size();
      out["metrics"] = metrics_json(pair_f_score(pred, truth));
      emit(ev_out, dump(out));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "gbm-lab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kRegime:
      case ErrorKind::kInfeasible:
      case ErrorKind::kPhase1Degenerate:
        return kExitInfeasible;
      default:
        return kExitUsage;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gbm-lab: bad JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
