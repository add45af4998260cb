#include "udom/reductions.hpp"

#include <stdexcept>

#include "udom/coloring.hpp"
#include "udom/validate.hpp"

namespace udom {

Graph gen_gn_family(int n, GnVariant variant) {
  if (n < 1) throw std::invalid_argument("gen_gn_family: n must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(n + i, n + j);
    }
    edges.emplace_back(i, n + i);
  }
  int total = 2 * n;
  if (variant != GnVariant::plain) {
    for (int i = 0; i < n; ++i) edges.emplace_back(2 * n, i);
    ++total;
  }
  if (variant == GnVariant::double_prime) {
    for (int i = 0; i < n; ++i) edges.emplace_back(2 * n + 1, n + i);
    ++total;
  }
  return Graph(total, edges);
}

ReductionArtifact mis_to_ud_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 3) throw std::invalid_argument("mis_to_ud_cubic: input graph is not cubic");
  }
  const int n = g.n();
  const auto src_edges = g.edges();
  const int m = static_cast<int>(src_edges.size());
  std::vector<Edge> edges;
  for (int j = 0; j < m; ++j) {
    const auto [a, b] = src_edges[static_cast<std::size_t>(j)];
    const int base = n + 6 * j;
    const int ab = base, ab1 = base + 1, ab2 = base + 2, ba = base + 3, ba1 = base + 4, ba2 = base + 5;
    edges.insert(edges.end(), {{a, ab}, {ab, ab1}, {ab, ab2}, {ba, ba1}, {ba, ba2}, {ba, b},
                               {ab1, ba1}, {ab1, ba2}, {ab2, ba1}, {ab2, ba2}});
  }
  ReductionArtifact art;
  art.family = "cubic-gadget";
  art.graph = Graph(n + 6 * m, edges);
  art.relation = {1, 3 * m, ""};
  art.layout = {{"original", "0.." + std::to_string(n - 1)},
                {"gadget(j)", "n+6j: a_b, a_b1, a_b2, b_a, b_a1, b_a2 for the j-th edge {a<b}"},
                {"n", std::to_string(n)},
                {"m", std::to_string(m)}};
  const Graph out = *art.graph;
  art.forward = [g, out, src_edges, n](const VertexSet& is) {
    if (!is_independent(g, is)) throw std::invalid_argument("forward map expects an independent set");
    VertexSet d(out.n());
    is.for_each([&](Vertex v) { d.insert(v); });
    for (std::size_t j = 0; j < src_edges.size(); ++j) {
      const int base = n + 6 * static_cast<int>(j);
      if (!is.contains(src_edges[j].second)) {
        d.insert(base + 3);
        d.insert(base + 1);
        d.insert(base + 2);
      } else {
        d.insert(base);
        d.insert(base + 4);
        d.insert(base + 5);
      }
    }
    return extend_to_maximal_independent(out, d);
  };
  art.backward = [g](const VertexSet& d) {
    VertexSet s(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      if (d.contains(v)) s.insert(v);
    }
    // Conflict peeling: drop the larger endpoint of the first edge inside s.
    for (bool conflict = true; conflict;) {
      conflict = false;
      for (const auto& [a, b] : g.edges()) {
        if (s.contains(a) && s.contains(b)) {
          s.erase(b);
          conflict = true;
          break;
        }
      }
    }
    return s;
  };
  return art;
}

std::pair<Graph, VertexSet> pad_to_cubic(const Graph& g, const VertexSet& s) {
  std::vector<Edge> edges = g.edges();
  int next = g.n();
  std::vector<Vertex> black;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 3) throw std::invalid_argument("pad_to_cubic: vertex of degree above three");
    for (int rep = g.degree(v); rep < 3; ++rep) {
      const int w2 = next, w3 = next + 1, w5 = next + 2, y = next + 3, w4 = next + 4;
      next += 5;
      edges.insert(edges.end(), {{w2, v}, {w2, w3}, {w2, w5}, {w5, w4}, {w4, w3}, {w5, y}, {w3, y}, {y, w4}});
      black.push_back(w3);
      black.push_back(w5);
    }
  }
  Graph out(next, edges);
  VertexSet s2(next);
  s.for_each([&](Vertex v) { s2.insert(v); });
  for (Vertex b : black) s2.insert(b);
  return {std::move(out), s2};
}

ReductionArtifact mmhs_to_ud(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    edges.emplace_back(n + m, i);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) edges.emplace_back(n + a, n + b);
    h.edge(a).for_each([&](Vertex v) { edges.emplace_back(v, n + a); });
  }
  ReductionArtifact art;
  art.family = "mmhs-gap";
  art.graph = Graph(n + m + 1, edges);
  art.relation = {1, 0, "opt(h) >= 3"};
  art.layout = {{"base", "0.." + std::to_string(n - 1)},
                {"edge-vertex(j)", "n+j"},
                {"apex", std::to_string(n + m)}};
  const int total = n + m + 1;
  art.forward = [total](const VertexSet& hit) {
    VertexSet d(total);
    hit.for_each([&](Vertex v) { d.insert(v); });
    return d;
  };
  art.backward = [n](const VertexSet& d) {
    VertexSet hit(n);
    d.for_each([&](Vertex v) {
      if (v < n) hit.insert(v);
    });
    return hit;
  };
  return art;
}

ReductionArtifact multicoloured_clique_to_ud(const Graph& g, const std::vector<int>& colour, int k) {
  if (static_cast<int>(colour.size()) != g.n()) throw std::invalid_argument("colour vector must cover every vertex");
  std::vector<std::vector<Vertex>> cls(static_cast<std::size_t>(std::max(k, 0)));
  for (Vertex v = 0; v < g.n(); ++v) {
    const int c = colour[static_cast<std::size_t>(v)];
    if (c < 0 || c >= k) throw std::invalid_argument("colour out of range");
    cls[static_cast<std::size_t>(c)].push_back(v);
  }
  ReductionArtifact art;
  art.family = "mcc";
  for (const auto& c : cls) art.trivial_no = art.trivial_no || c.empty();

  std::vector<Edge> cross;
  for (const auto& [u, w] : g.edges()) {
    if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(w)]) cross.emplace_back(u, w);
  }
  const int n = g.n();
  std::vector<Edge> edges;
  for (const auto& c : cls) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) edges.emplace_back(c[a], c[b]);
    }
  }
  auto pair_of = [&](const Edge& e) {
    const int i = colour[static_cast<std::size_t>(e.first)];
    const int j = colour[static_cast<std::size_t>(e.second)];
    return std::pair<int, int>(std::min(i, j), std::max(i, j));
  };
  for (std::size_t a = 0; a < cross.size(); ++a) {
    const Vertex ve = n + static_cast<int>(a);
    const auto [i, j] = pair_of(cross[a]);
    for (int c : {i, j}) {
      for (Vertex x : cls[static_cast<std::size_t>(c)]) {
        if (x != cross[a].first && x != cross[a].second) edges.emplace_back(ve, x);
      }
    }
    for (std::size_t b = a + 1; b < cross.size(); ++b) {
      if (pair_of(cross[b]) == std::pair<int, int>(i, j)) edges.emplace_back(ve, n + static_cast<int>(b));
    }
  }
  const int total = n + static_cast<int>(cross.size());
  art.graph = Graph(total, edges);
  art.threshold = k + (k * k - k) / 2;
  art.relation = {1, 0, "Gamma(G') >= k + (k^2-k)/2 iff a multicoloured k-clique exists"};
  art.layout = {{"original", "0.." + std::to_string(n - 1)},
                {"edge-vertex(j)", "n+j for the j-th edge of g joining different classes"},
                {"k", std::to_string(k)}};
  art.forward = [cross, n, total](const VertexSet& clique) {
    VertexSet d(total);
    clique.for_each([&](Vertex v) { d.insert(v); });
    for (std::size_t a = 0; a < cross.size(); ++a) {
      if (clique.contains(cross[a].first) && clique.contains(cross[a].second)) d.insert(n + static_cast<int>(a));
    }
    return d;
  };
  art.backward = [n](const VertexSet& d) {
    VertexSet c(n);
    d.for_each([&](Vertex v) {
      if (v < n) c.insert(v);
    });
    return c;
  };
  return art;
}

bool has_multicoloured_clique(const Graph& g, const std::vector<int>& colour, int k) {
  std::vector<Vertex> chosen;
  std::function<bool(int)> pick = [&](int c) {
    if (c == k) return true;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (colour[static_cast<std::size_t>(v)] != c) continue;
      bool ok = true;
      for (Vertex u : chosen) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      if (pick(c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

ReductionArtifact mis_to_mmhs(const Graph& g, int d, int max_vertices) {
  if (d < 2) throw std::invalid_argument("mis_to_mmhs: d must be at least 2");
  const int n = g.n();
  std::vector<std::vector<Vertex>> sets;
  std::vector<Vertex> cur;
  std::function<void(Vertex)> grow = [&](Vertex from) {
    if (static_cast<int>(cur.size()) == d - 1) {
      sets.push_back(cur);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      for (Vertex u : cur) ok = ok && !g.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      grow(v + 1);
      cur.pop_back();
      if (static_cast<long long>(sets.size()) * n + n > max_vertices) {
        throw CapExceeded("mis_to_mmhs: output exceeds " + std::to_string(max_vertices) + " vertices");
      }
    }
  };
  grow(0);
  const long long total_ll = n + static_cast<long long>(sets.size()) * n;
  if (total_ll > max_vertices) throw CapExceeded("mis_to_mmhs: output exceeds " + std::to_string(max_vertices) + " vertices");
  const int total = static_cast<int>(total_ll);
  std::vector<std::vector<Vertex>> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      auto e = sets[s];
      e.push_back(n + static_cast<int>(s) * n + i);
      edges.push_back(std::move(e));
    }
  }
  ReductionArtifact art;
  art.family = "mis-to-mmhs";
  art.hypergraph = Hypergraph::from_lists(total, edges);
  art.relation = {1, 0, "gap: alpha large gives a hitting set of size >= C(alpha, d-1)·n"};
  art.layout = {{"original", "0.." + std::to_string(n - 1)},
                {"u(S,i)", "n + s·n + i for the s-th independent (d-1)-set S"},
                {"sets", std::to_string(sets.size())}};
  art.forward = [g, sets, n, total](const VertexSet& is) {
    if (!is_independent(g, is)) throw std::invalid_argument("forward map expects an independent set");
    const VertexSet maximal = extend_to_maximal_independent(g, is);
    VertexSet hit(total);
    for (Vertex v = 0; v < n; ++v) {
      if (!maximal.contains(v)) hit.insert(v);
    }
    for (std::size_t s = 0; s < sets.size(); ++s) {
      bool inside = true;
      for (Vertex v : sets[s]) inside = inside && maximal.contains(v);
      if (!inside) continue;
      for (int i = 0; i < n; ++i) hit.insert(n + static_cast<int>(s) * n + i);
    }
    return hit;
  };
  art.backward = [n](const VertexSet& hit) {
    VertexSet is(n);
    for (Vertex v = 0; v < n; ++v) {
      if (!hit.contains(v)) is.insert(v);
    }
    return is;
  };
  return art;
}

}  // namespace udom
