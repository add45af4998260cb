#pragma once

#include <functional>
#include <string>

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"
#include "udom/rational.hpp"

namespace udom {

struct ApproxReport {
  /// coud4: the complement V \ S of a maximal independent set S.
  /// udcolor: a maximal independent (hence minimal dominating) set.
  /// mmhs: a minimal hitting set.
  VertexSet witness;
  int value = 0;
  /// Guarantee as printed, e.g. "4" or "max{rho, (3*rho*3+2)/(6*rho)}".
  std::string guarantee;
  /// Which sub-algorithm produced the witness.
  std::string component;
  /// udcolor: colours used (p) and max degree entering the ratio.
  int colours = 0;
  int delta = 0;

  /// udcolor ratio max{rho, (Δ·rho·p+Δ-1)/(2·rho·Δ)} at a given rho.
  Rational ratio_at(const Rational& rho) const;
};

/// Complement of a maximal independent set grown from the vertices missed by
/// a maximal matching; at most 2·tau <= 4(n - Gamma).
ApproxReport coud_4approx(const Graph& g);

/// Per component, the larger of a greedy min-degree independent set and the
/// largest class of a Brooks colouring, each extended to a maximal
/// independent set.
ApproxReport ud_coloring_approx(const Graph& g);

/// Minimal hitting set of size Omega(n^(1/d)) on the covered vertices.
ApproxReport mmhs_approx(const Hypergraph& h);

/// Drops vertices from `s`, highest index first, while `valid` still holds
/// and the vertex is not in `keep`. Throws std::invalid_argument when s itself
/// fails `valid`.
VertexSet minimalize(const VertexSet& s, const std::function<bool(const VertexSet&)>& valid, const VertexSet* keep = nullptr);
VertexSet minimalize_dominating(const Graph& g, const VertexSet& s, const VertexSet* keep = nullptr);
VertexSet minimalize_hitting(const Hypergraph& h, const VertexSet& s, const VertexSet* keep = nullptr);

}  // namespace udom
