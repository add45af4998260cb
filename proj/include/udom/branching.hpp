#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "udom/graph.hpp"
#include "udom/solve_report.hpp"

namespace udom {

enum class CoudRule { H1, H2, R1, B1, B2, B3 };
inline constexpr std::array<const char*, 6> kCoudRuleNames{"H1", "H2", "R1", "B1", "B2", "B3"};

struct SearchStats {
  /// Nodes at which each rule fired (indexed by CoudRule).
  std::array<std::uint64_t, 6> rule_nodes{};
  int max_depth = 0;
  /// Child calls whose budget did not drop by the amount the rule charges.
  std::uint64_t budget_violations = 0;

  std::uint64_t total() const;
  /// "H1=.. H2=.. ... max_depth=.."
  std::string to_string() const;
};

struct BranchResult {
  bool yes = false;
  /// value: |witness| on yes; witness: the accepting set.
  SolveReport report;
  SearchStats stats;
};

/// Is Gamma(g) >= n - ell? Branches on F (dominating, matched to a private
/// neighbour), I (own private neighbour) and the complement, with budget
/// 2κ starting at 2·ell. Rules are tried in the order H1, H2, R1, B1, B2, B3;
/// within a rule the lowest-index eligible vertex is used.
BranchResult compute_coud(const Graph& g, int ell);

/// Is Gamma(g) >= k? Repeatedly picks the lowest undominated vertex, branches
/// on which of its closed neighbours enters D and on that vertex's private
/// neighbour; with k vertices fixed the set is completed greedily and
/// re-validated. Meant for bounded degree, correct for any graph.
BranchResult ud_bounded_degree(const Graph& g, int k);

}  // namespace udom
