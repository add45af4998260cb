#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"

namespace udom {

enum class GraphFormat {
  /// "p <n> <m>" header, "e <u> <v>" edge lines, "c" comments.
  dimacs_like,
  /// "<n> <m>" header followed by "<u> <v>" lines; "#" or "c" comments.
  edge_list,
};

struct ParseOptions {
  GraphFormat format = GraphFormat::dimacs_like;
  /// Labels in the file start at 1 instead of 0.
  bool one_based = false;
};

/// Throws FormatError carrying the 1-based line number of the offending line.
Graph parse_graph(std::string_view text, const ParseOptions& opts = {});
Graph read_graph_file(const std::string& path, const ParseOptions& opts = {});
/// Always writes the dimacs-like format with 0-based labels.
std::string serialize_graph(const Graph& g);

/// "p <n> <k>" header then k lines "h <v1> <v2> ...".
Hypergraph parse_hypergraph(std::string_view text, bool one_based = false);
Hypergraph read_hypergraph_file(const std::string& path, bool one_based = false);
std::string serialize_hypergraph(const Hypergraph& h);

/// Vertex-set files: optional "s <size>" header, then whitespace-separated ids.
VertexSet parse_vertex_set(std::string_view text, int universe, bool one_based = false);
std::string serialize_vertex_set(const VertexSet& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace udom
