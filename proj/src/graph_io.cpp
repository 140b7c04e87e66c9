#include "gbm/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gbm/error.hpp"
#include "gbm/rng.hpp"

namespace gbm {

namespace {

[[noreturn]] void io_fail(const std::string& what) { throw Error(ErrorKind::kIo, what); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_csv_doubles(const std::string& line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(',', pos);
    if (end == std::string::npos) end = line.size();
    try {
      std::size_t used = 0;
      const std::string tok = line.substr(pos, end - pos);
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) io_fail("trailing characters in coordinate '" + tok + "'");
    } catch (const std::logic_error&) {
      io_fail("bad coordinate in line '" + line + "'");
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g, int t) {
  os << g.num_vertices() << ' ' << g.num_edges() << ' ' << t << '\n';
  g.for_each_edge([&](VertexId u, VertexId v) { os << u << ' ' << v << '\n'; });
}

GraphFile read_graph(std::istream& is) {
  std::size_t n = 0, m = 0;
  int t = 0;
  if (!(is >> n >> m >> t)) io_fail("graph header must be 'n m t'");
  if (t < 1) io_fail("graph header has t < 1");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(is >> u >> v)) io_fail("graph file truncated: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      io_fail("edge endpoint out of range");
    if (u >= v) io_fail("edge lines must have u < v");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  GraphFile out;
  out.graph = Graph::from_edges(n, std::move(edges));
  if (out.graph.num_edges() != m) io_fail("graph file contains duplicate edges");
  out.t = t;
  return out;
}

void write_embedding(std::ostream& os, const Embedding& emb) {
  if (const auto* x = std::get_if<CircleCoords>(&emb)) {
    for (double v : *x) os << format_double(v) << '\n';
    return;
  }
  const auto& pts = std::get<SphereCloud>(emb);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto p = pts[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) os << ',';
      os << format_double(p[k]);
    }
    os << '\n';
  }
}

Embedding read_embedding(std::istream& is, int t) {
  if (t < 1) io_fail("embedding dimension must be >= 1");
  std::string line;
  if (t == 1) {
    CircleCoords x;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      auto vals = parse_csv_doubles(line);
      if (vals.size() != 1) io_fail("circle embedding lines hold one coordinate");
      x.push_back(vals[0]);
    }
    return x;
  }
  std::vector<double> data;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto vals = parse_csv_doubles(line);
    if (vals.size() != static_cast<std::size_t>(t) + 1) io_fail("sphere embedding line has wrong width");
    data.insert(data.end(), vals.begin(), vals.end());
  }
  return SphereCloud(t, std::move(data));
}

void write_labels(std::ostream& os, const std::vector<int>& labels) {
  for (int l : labels) os << l << '\n';
}

std::vector<int> read_labels(std::istream& is) {
  std::vector<int> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) io_fail("bad label line '" + line + "'");
    out.push_back(v);
  }
  return out;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::uint64_t h = mix64(g.num_vertices() + 0x9e3779b97f4a7c15ULL);
  g.for_each_edge([&](VertexId u, VertexId v) {
    h = mix64(h ^ ((static_cast<std::uint64_t>(u) << 32) | v));
  });
  return h;
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) io_fail("cannot open '" + path + "' for writing");
  os << content;
  if (!os) io_fail("write to '" + path + "' failed");
}

std::string load_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) io_fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace gbm
