#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udom/graph.hpp"

namespace udom {

struct KernelStep {
  /// "high-degree", "isolated", "clique", "cycle", "trivial-component",
  /// "size-bound", "brooks-colouring".
  std::string rule;
  /// Affected vertex in input numbering, or -1 for whole-instance rules.
  Vertex vertex = -1;
  /// Parameter value after the step.
  int parameter = 0;
};

/// Either an equivalent smaller instance or a settled answer.
struct KernelResult {
  enum class Outcome { reduced, decided };

  Outcome outcome = Outcome::reduced;
  bool answer = false;  // meaningful when decided
  Graph graph;          // kernel instance when reduced
  int parameter = 0;    // new parameter when reduced
  /// kept[i] is the input id of kernel vertex i.
  std::vector<Vertex> kept;
  std::vector<KernelStep> trace;
  /// Minimal dominating set of the input backing a decided "yes", when known.
  std::optional<VertexSet> certificate;

  bool reduced() const { return outcome == Outcome::reduced; }
  bool decided() const { return outcome == Outcome::decided; }
};

/// Co-Upper Domination (is Gamma >= n - ell?): delete vertices of degree > ell',
/// decrementing ell' each time (highest degree first, lowest index on ties),
/// then isolated vertices; reject when more than ell'(ell'+1) vertices or ell'^2
/// edges survive.
KernelResult coud_kernelize(const Graph& g, int ell);

/// Upper Domination (is Gamma >= k?): cliques and cycles are solved exactly,
/// other components are certified through a Brooks colouring. A reduced
/// output has at most Δ·k' vertices.
KernelResult ud_kernel_brooks(const Graph& g, int k);

/// Co-Upper Domination kernel with at most (Δ+1/2)·ell vertices. Isolated
/// vertices are dropped, components of co-value one (some N[v] spans the
/// component) are solved directly and charged against ell.
KernelResult coud_kernel_degree(const Graph& g, int ell);

/// Deletes the vertices named by the trace, in order, from g.
Graph replay_trace(const Graph& g, const std::vector<KernelStep>& trace);

}  // namespace udom
