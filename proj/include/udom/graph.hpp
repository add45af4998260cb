#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "udom/vertex_set.hpp"

namespace udom {

using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graphs, hypergraphs, decompositions and witness files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exponential routine would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges are collapsed; self-loops and out-of-range endpoints throw.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return open_[u].contains(v); }
  /// N(v) and N[v] as bitsets.
  const VertexSet& open_nbhd(Vertex v) const { return open_[v]; }
  const VertexSet& closed_nbhd(Vertex v) const { return closed_[v]; }
  /// N[S].
  VertexSet closed_nbhd(const VertexSet& s) const;
  /// N(S) \ S.
  VertexSet open_nbhd(const VertexSet& s) const;

  std::vector<Edge> edges() const;
  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  /// Subgraph induced by `keep`; vertices are renumbered in increasing order.
  /// `old_ids`, when given, receives the original id of each new vertex.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* old_ids = nullptr) const;
  Graph without(const VertexSet& removed, std::vector<Vertex>* old_ids = nullptr) const;
  /// Relabel: new id of old vertex v is perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  bool is_regular() const;
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  double mean_degree = 0.0;
  bool regular = false;
};

DegreeStats degree_stats(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace udom
