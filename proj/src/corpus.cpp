#include "udom/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace udom {

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > 11) throw std::invalid_argument("canonical_code: at most 11 vertices");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Runs of equal degree are permuted independently.
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[static_cast<std::size_t>(j)]) == g.degree(order[static_cast<std::size_t>(i)])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  for (auto [a, b] : runs) std::sort(order.begin() + a, order.begin() + b);
  std::uint64_t best = 0;
  while (true) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) | (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1U : 0U);
      }
    }
    best = std::max(best, code);
    // Odometer over the runs.
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto [a, b] = runs[r];
      if (std::next_permutation(order.begin() + a, order.begin() + b)) break;
    }
    if (r == runs.size()) break;
  }
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("connected_graphs: 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    const int prev = size - 1;
    for (const auto& base : level) {
      const auto base_edges = base.edges();
      // Every connected graph has a vertex whose removal keeps it connected.
      for (std::uint32_t mask = 1; mask < (1U << prev); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < prev; ++v) {
          if (mask & (1U << v)) edges.emplace_back(v, prev);
        }
        Graph cand(size, edges);
        if (seen.insert(canonical_code(cand)).second) next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  return level;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_gnp(int n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = random_gnp(n, p, seed + attempt * 0x9E3779B97F4A7C15ULL);
    if (is_connected(g)) return g;
  }
}

Graph random_subcubic(int n, std::uint64_t seed, bool connected) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    // Stop at a random fill level so sparser graphs also occur.
    std::uniform_int_distribution<int> fill(n, 3 * n / 2);
    const int target = n > 1 ? fill(rng) : 0;
    for (const auto& [a, b] : pairs) {
      if (static_cast<int>(edges.size()) >= target) break;
      if (deg[static_cast<std::size_t>(a)] < 3 && deg[static_cast<std::size_t>(b)] < 3) {
        edges.emplace_back(a, b);
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
      }
    }
    Graph g(n, edges);
    if (!connected || is_connected(g)) return g;
  }
}

Graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("random_cubic: n must be even and at least 4");
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Vertex> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), {v, v, v});
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      Vertex a = std::min(points[i], points[i + 1]);
      Vertex b = std::max(points[i], points[i + 1]);
      ok = a != b && std::find(edges.begin(), edges.end(), Edge{a, b}) == edges.end();
      edges.emplace_back(a, b);
    }
    if (ok) return Graph(n, edges);
  }
}

Hypergraph random_hypergraph(int n, int m, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("random_hypergraph: need n >= 1 and d >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, std::min(d, n));
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<VertexSet> edges;
  for (int e = 0; e < m; ++e) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const int s = size_dist(rng);
    edges.push_back(VertexSet::from_vector(n, std::vector<Vertex>(pool.begin(), pool.begin() + s)));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace udom
