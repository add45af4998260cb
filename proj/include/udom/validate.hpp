#pragma once

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"

namespace udom {

bool is_dominating(const Graph& g, const VertexSet& d);

/// pn(v,S) = N[v] \ N[S \ {v}]. Throws std::invalid_argument when v is not in s.
VertexSet private_neighbours(const Graph& g, const VertexSet& s, Vertex v);

/// Every member of s has a nonempty private neighbourhood.
bool is_irredundant(const Graph& g, const VertexSet& s);
/// Dominating and irredundant.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

bool is_hitting_set(const Hypergraph& h, const VertexSet& s);
/// Hitting set in which every member is the sole hit of some edge.
bool is_minimal_hitting_set(const Hypergraph& h, const VertexSet& s);

/// Vertices of N[s] covered by exactly one member of s.
VertexSet covered_once(const Graph& g, const VertexSet& s);

}  // namespace udom
