#pragma once

#include <string>
#include <vector>

#include "udom/graph.hpp"

namespace udom {

/// Four-way vertex partition induced by a minimal dominating set D:
///   I = members of D that are their own private neighbour,
///   F = D \ I, each matched to an external private neighbour in P,
///   O = everything else.
struct FipoPartition {
  VertexSet f;
  VertexSet i;
  VertexSet p;
  VertexSet o;
  /// matched_to[v] is v's partner in P for v in F, -1 elsewhere.
  std::vector<Vertex> matched_to;

  VertexSet dominating_set() const { return f | i; }
};

/// P-selection takes the smallest external private neighbour of each F vertex.
/// Throws std::invalid_argument if d is not a minimal dominating set.
FipoPartition fipo_decompose(const Graph& g, const VertexSet& d);

/// Empty string when every partition property holds, otherwise a description
/// of the first violated one.
std::string fipo_violation(const Graph& g, const FipoPartition& fipo);
inline bool fipo_valid(const Graph& g, const FipoPartition& fipo) { return fipo_violation(g, fipo).empty(); }

}  // namespace udom
