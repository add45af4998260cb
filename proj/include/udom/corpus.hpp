#pragma once

#include <cstdint>
#include <vector>

#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"

namespace udom {

/// Fixed seed used whenever a caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20160701;

/// Canonical adjacency code: lexicographically largest upper-triangle bit
/// string over relabelings that sort vertices by non-increasing degree.
/// Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1, 1, 2, 6, 21, 112, 853 for n = 1..7). Requires 1 <= n <= 8.
std::vector<Graph> connected_graphs(int n);

Graph random_gnp(int n, double p, std::uint64_t seed);
/// Resamples until connected.
Graph random_connected_gnp(int n, double p, std::uint64_t seed);
/// Random edge insertion keeping every degree at most three.
Graph random_subcubic(int n, std::uint64_t seed, bool connected = false);
/// Random 3-regular graph (n even, n >= 4) via retried pairings.
Graph random_cubic(int n, std::uint64_t seed);
/// m edges, sizes uniform in 1..d, members uniform without repetition.
Hypergraph random_hypergraph(int n, int m, int d, std::uint64_t seed);

}  // namespace udom
