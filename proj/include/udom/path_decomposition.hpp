#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "udom/graph.hpp"

namespace udom {

struct PathDecomposition {
  int n = 0;
  std::vector<VertexSet> bags;

  /// Largest bag size minus one; -1 when there are no bags.
  int width() const;
};

struct NiceStep {
  enum class Kind { introduce, forget };
  Kind kind = Kind::introduce;
  Vertex v = 0;
  friend bool operator==(const NiceStep&, const NiceStep&) = default;
};

/// Introduce/forget sequence that starts and ends with the empty bag.
struct NicePathDecomposition {
  int n = 0;
  std::vector<NiceStep> steps;

  int width() const;
  /// Bag after each step.
  std::vector<VertexSet> bags() const;
};

enum class DecompositionStrategy { bfs_order, min_degree, random_order };

/// Builds a decomposition from a vertex order: bag i holds the i-th vertex
/// plus every earlier vertex that still has a neighbour at position >= i.
PathDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);
/// `seed` is only used by random_order.
PathDecomposition build_path_decomposition(const Graph& g, DecompositionStrategy strategy, std::uint64_t seed = 0);
DecompositionStrategy parse_strategy(std::string_view name);

/// Empty string when pd is a path decomposition of g, otherwise the first
/// violated property.
std::string decomposition_violation(const Graph& g, const PathDecomposition& pd);
std::string decomposition_violation(const Graph& g, const NicePathDecomposition& nd);

/// Between consecutive bags, forgets come first (increasing id), then
/// introduces (increasing id). Throws std::invalid_argument when some vertex
/// occurs in a non-contiguous run of bags.
NicePathDecomposition nicify(const PathDecomposition& pd);
/// The same decomposition traversed backwards.
NicePathDecomposition reverse(const NicePathDecomposition& nd);

/// "s pd <bags> <width+1> <n>" then "b <id> <v1> <v2> ..." with 1-based bag ids.
PathDecomposition parse_path_decomposition(std::string_view text, bool one_based = false);
std::string serialize_path_decomposition(const PathDecomposition& pd);
/// "i <v>" / "f <v>" lines.
NicePathDecomposition parse_nice_steps(std::string_view text, int n);
std::string serialize_nice_steps(const NicePathDecomposition& nd);

}  // namespace udom
