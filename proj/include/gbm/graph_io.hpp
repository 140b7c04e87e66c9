#pragma once

// Plain-text graph, embedding, and label files.
//
//   graph:      "n m t" then m lines "u v" with 0-indexed u < v
//   embeddings: one line per vertex, comma-separated coordinates
//   labels:     one integer label per line (-1 = unassigned)
//
// ASCII with LF line endings throughout.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gbm/generators.hpp"
#include "gbm/graph.hpp"

namespace gbm {

struct GraphFile {
  Graph graph;
  int t = 1;
};

void write_graph(std::ostream& os, const Graph& g, int t);
GraphFile read_graph(std::istream& is);

void write_embedding(std::ostream& os, const Embedding& emb);
/// t = 1 reads circle coordinates (one value per line); t > 1 reads t+1 values.
Embedding read_embedding(std::istream& is, int t);

void write_labels(std::ostream& os, const std::vector<int>& labels);
std::vector<int> read_labels(std::istream& is);

/// Order-sensitive 64-bit digest of (n, edge list).
std::uint64_t graph_fingerprint(const Graph& g);

// File-path conveniences; throw Error(kIo) when a file cannot be opened.
void save_text(const std::string& path, const std::string& content);
std::string load_text(const std::string& path);

}  // namespace gbm
