#pragma once

#include <cstdint>
#include <vector>

#include "udom/graph.hpp"
#include "udom/path_decomposition.hpp"
#include "udom/solve_report.hpp"

namespace udom {

/// Bag labels. F: in D and matched to a private neighbour; F*: in D, private
/// neighbour still owed; I: in D with no neighbour in D; P: matched private
/// neighbour; O: dominated; O*: not dominated yet.
enum class DpLabel : std::uint8_t { F = 0, Fstar = 1, I = 2, P = 3, O = 4, Ostar = 5 };
inline constexpr int kDpLabels = 6;

struct DpOptions {
  Exec exec = Exec::parallel;
  /// Keep parent pointers and rebuild a witness.
  bool witness = true;
  /// Largest bag (width + 1) accepted before CapExceeded.
  int max_bag = 10;
};

struct DpStats {
  /// Largest bag seen.
  int max_bag = 0;
  /// Feasible states (value >= 0) after each step.
  std::vector<std::uint64_t> feasible_states;
  /// Source lookups per step.
  std::vector<std::uint64_t> work;
  /// Steps whose feasible-state count or work exceeded 7^|bag|.
  int bound_violations = 0;
  /// Forgets along the witness path that dropped an F* or O* vertex.
  int promise_violations = 0;
};

struct DpResult {
  SolveReport report;
  DpStats stats;
};

/// Gamma(g) by dynamic programming over the six-label bag partitions.
/// Throws std::invalid_argument when nd is not a decomposition of g and
/// CapExceeded when a bag is larger than opts.max_bag.
DpResult dp_upper_domination(const Graph& g, const NicePathDecomposition& nd, const DpOptions& opts = {});

}  // namespace udom
