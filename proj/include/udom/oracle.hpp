#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"
#include "udom/solve_report.hpp"

namespace udom {

/// Size limits for the exhaustive routines. Exceeding one throws CapExceeded.
struct OracleCaps {
  int enumerate_n = 24;
  int chain_n = 16;
  int mdse_n = 24;
  int mmhs_n = 24;
};

/// ir <= gamma <= i <= alpha <= Gamma <= IR.
struct ChainValues {
  int ir = 0;
  int gamma = 0;
  int i = 0;
  int alpha = 0;
  int Gamma = 0;
  int IR = 0;

  /// Vertex cover number via Gallai: n - alpha.
  int tau(int n) const { return n - alpha; }
  bool chain_holds() const { return ir <= gamma && gamma <= i && i <= alpha && alpha <= Gamma && Gamma <= IR; }
  friend bool operator==(const ChainValues&, const ChainValues&) = default;
};

/// Visits every minimal dominating set exactly once; returns how many.
/// Branches on the lowest undominated vertex over its closed neighbourhood,
/// prunes as soon as the partial set is redundant.
std::uint64_t enumerate_minimal_dominating_sets(const Graph& g, const std::function<void(const VertexSet&)>& visitor,
                                                const OracleCaps& caps = {});

/// Gamma(g) as the largest enumerated minimal dominating set.
SolveReport upper_domination_exact(const Graph& g, const OracleCaps& caps = {});

/// All six chain parameters from one scan over the 2^n subsets.
ChainValues chain_values(const Graph& g, Exec exec = Exec::parallel, const OracleCaps& caps = {});

struct MdseResult {
  bool exists = false;
  std::optional<VertexSet> witness;
  std::uint64_t nodes_explored = 0;
};

/// Is there a minimal dominating set containing s?
MdseResult mdse_decide(const Graph& g, const VertexSet& s, const OracleCaps& caps = {});

/// Largest minimal hitting set. Vertices outside every edge never belong to
/// a minimal hitting set.
SolveReport mmhs_exact(const Hypergraph& h, const OracleCaps& caps = {});

}  // namespace udom
