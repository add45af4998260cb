#pragma once

#include <vector>

#include "udom/graph.hpp"

namespace udom {

/// Base set 0..n-1 with a family of nonempty hyperedges (repeats allowed).
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n) : n_(n) {}
  /// Throws FormatError on an empty edge or a member outside 0..n-1.
  Hypergraph(int n, std::vector<VertexSet> edges);
  static Hypergraph from_lists(int n, const std::vector<std::vector<Vertex>>& edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  /// d: the largest edge size (0 for an edgeless hypergraph).
  int max_edge_size() const;
  /// Vertices occurring in at least one edge.
  VertexSet covered_vertices() const;
  /// Edge indices containing v.
  std::vector<int> incident_edges(Vertex v) const;

  /// Edges entirely inside `keep`, restricted and renumbered to keep's members.
  Hypergraph induced(const VertexSet& keep, std::vector<Vertex>* old_ids = nullptr) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// One hyperedge N[v] per vertex v; minimal hitting sets of the result are
/// exactly the minimal dominating sets of g.
Hypergraph closed_neighbourhood_hypergraph(const Graph& g);

}  // namespace udom
