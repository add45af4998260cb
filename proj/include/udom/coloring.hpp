#pragma once

#include <vector>

#include "udom/graph.hpp"

namespace udom {

struct Coloring {
  /// colour[v] in 0..colours-1.
  std::vector<int> colour;
  int colours = 0;

  /// Members of the largest colour class (lowest colour id on ties).
  VertexSet largest_class(int n) const;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Degeneracy ordering greedy colouring: at most degeneracy+1 colours.
Coloring smallest_last_coloring(const Graph& g);

/// Proper colouring with at most max(Δ, 2) colours unless some component is
/// complete or an odd cycle (Brooks). Connected Δ-regular components that
/// are neither get the Lovász construction.
Coloring brooks_coloring(const Graph& g);

/// Repeatedly take a minimum-degree vertex of the remaining graph and delete
/// its closed neighbourhood. Ties go to the lowest index.
VertexSet greedy_min_degree_independent_set(const Graph& g);

/// Adds vertices in increasing index order while independence holds.
/// `s` must be independent.
VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s);

/// Endpoints of a greedy maximal matching (edges scanned in order).
VertexSet maximal_matching_cover(const Graph& g);

}  // namespace udom
