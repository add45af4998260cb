#pragma once

#include "udom/fipo.hpp"
#include "udom/graph.hpp"
#include "udom/rational.hpp"

namespace udom {

/// For a witness D of Gamma on a connected graph: |D| > alpha implies |I| <= alpha - 2.
/// Throws std::invalid_argument when fipo is not a valid partition of g.
bool lemma1_check(const Graph& g, const FipoPartition& fipo, int alpha);

/// floor(max{alpha, n/2 + alpha/2 - 1}), an upper bound on Gamma of a connected
/// graph. Requires 1 <= alpha <= n.
int gamma_upper_bound(int n, int alpha);
/// The same bound before flooring.
Rational gamma_upper_bound_exact(int n, int alpha);

/// max{alpha, n/2 + alpha(Δ-δ)/(2Δ) - (Δ-δ)/Δ}. Requires 0 <= δ <= Δ, Δ >= 1,
/// 1 <= alpha <= n.
Rational gamma_upper_bound_degree(int n, int alpha, int delta_min, int delta_max);

/// tau/2 + 1 <= n - Gamma <= tau.
bool co_gamma_bounds(int n, int tau, int Gamma);
/// Graphs where the lower half of the previous check cannot hold: Gamma equals
/// alpha and tau < 2 (stars, K2). Reported separately rather than counted as
/// violations.
bool co_gamma_boundary_case(int tau, int alpha, int Gamma);

/// Admissible pruning for a connected graph: true when no minimal dominating
/// set can reach `target` given any upper bound alpha_hat >= alpha.
bool prune(int n, int alpha_hat, int delta_max, int delta_min, int target);

}  // namespace udom
