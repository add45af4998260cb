#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"

namespace udom {

/// opt(target) = a·opt(source) + b, possibly only under the stated condition.
struct ValueRelation {
  int a = 1;
  int b = 0;
  std::string condition;
};

struct ReductionArtifact {
  std::string family;
  std::optional<Graph> graph;
  std::optional<Hypergraph> hypergraph;
  /// Source witness to target witness.
  std::function<VertexSet(const VertexSet&)> forward;
  /// Target witness to source witness.
  std::function<VertexSet(const VertexSet&)> backward;
  ValueRelation relation;
  /// Decision threshold on the target side, where the reduction is a decision one.
  int threshold = 0;
  /// Set when the source is a trivial no-instance (e.g. an empty colour class).
  bool trivial_no = false;
  /// Human-readable index layout, one (key, value) pair per entry.
  std::vector<std::pair<std::string, std::string>> layout;
};

enum class GnVariant { plain, prime, double_prime };

/// Two n-cliques V = {0..n-1}, W = {n..2n-1} joined by the matching v_i w_i.
/// prime adds v0 = 2n adjacent to all of V; double_prime also adds
/// w0 = 2n+1 adjacent to all of W. Requires n >= 1.
Graph gen_gn_family(int n, GnVariant variant);

/// Each edge {a,b} (a < b, j-th in edge order) gets six vertices starting at
/// n + 6j: a_b, a_b1, a_b2, b_a, b_a1, b_a2, with a-a_b, a_b-a_b1, a_b-a_b2,
/// b_a-b_a1, b_a-b_a2, b_a-b, and all four edges between {a_b1,a_b2} and
/// {b_a1,b_a2}. The output is cubic; Gamma(G') = alpha(G) + 3m.
/// Throws std::invalid_argument unless g is cubic.
ReductionArtifact mis_to_ud_cubic(const Graph& g);

/// Attaches the five-vertex block w2-v, w2-{w3,w5}, {w3,w5}-{y,w4}, y-w4 to
/// every degree-2 vertex once and to every degree-1 vertex twice (degree 0:
/// three times). w3 and w5 join `s`. Throws std::invalid_argument on degree > 3.
std::pair<Graph, VertexSet> pad_to_cubic(const Graph& g, const VertexSet& s);

/// Vertices 0..n-1 for the base set, n+j for edge j, apex n+m. V and the
/// edge vertices are cliques, the apex sees all of V, i ~ u_e iff i in e.
/// Minimal hitting sets of h are minimal dominating sets of the output; a
/// minimal dominating set with more than two vertices is a minimal hitting set.
ReductionArtifact mmhs_to_ud(const Hypergraph& h);

/// colour[v] in 0..k-1. Output keeps vertices 0..n-1, then one edge vertex per
/// edge of g between different classes, in edge order. Gamma(G') >= k + (k^2-k)/2
/// iff g has a clique with one vertex per class.
ReductionArtifact multicoloured_clique_to_ud(const Graph& g, const std::vector<int>& colour, int k);

/// Original edges plus, for every independent (d-1)-set S (lexicographic),
/// n new vertices u_{S,i} with edges S ∪ {u_{S,i}}. Throws CapExceeded when the
/// output would have more than max_vertices vertices.
ReductionArtifact mis_to_mmhs(const Graph& g, int d, int max_vertices = 20000);

/// Brute-force multicoloured clique search.
bool has_multicoloured_clique(const Graph& g, const std::vector<int>& colour, int k);

}  // namespace udom
