#include "udom/coloring.hpp"

#include <algorithm>
#include <deque>

namespace udom {

namespace {

Coloring greedy_in_order(const Graph& g, const std::vector<Vertex>& order) {
  Coloring c{std::vector<int>(static_cast<std::size_t>(g.n()), -1), 0};
  std::vector<char> used;
  for (Vertex v : order) {
    used.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
    for (Vertex w : g.neighbours(v)) {
      const int cw = c.colour[static_cast<std::size_t>(w)];
      if (cw >= 0 && cw < static_cast<int>(used.size())) used[static_cast<std::size_t>(cw)] = 1;
    }
    int k = 0;
    while (used[static_cast<std::size_t>(k)]) ++k;
    c.colour[static_cast<std::size_t>(v)] = k;
    c.colours = std::max(c.colours, k + 1);
  }
  return c;
}

std::vector<Vertex> smallest_last_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> removal;
  removal.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[static_cast<std::size_t>(v)] && (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    removed[static_cast<std::size_t>(best)] = 1;
    removal.push_back(best);
    for (Vertex w : g.neighbours(best)) --deg[static_cast<std::size_t>(w)];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

/// Vertices of `g` minus `skip` reachable from root, by decreasing BFS
/// distance (root last). Returns empty when not all of V \ skip is reached.
std::vector<Vertex> reverse_bfs_order(const Graph& g, Vertex root, const VertexSet& skip) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> order;
  std::deque<Vertex> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0 && !skip.contains(w)) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) + skip.size() != g.n()) return {};
  std::reverse(order.begin(), order.end());
  return order;
}

bool connected_without(const Graph& g, const VertexSet& removed) {
  const Vertex start = (g.all_vertices() - removed).first();
  if (start < 0) return true;
  return !reverse_bfs_order(g, start, removed).empty();
}

/// Connected Δ-regular graph, Δ >= 3, neither complete nor a cycle.
Coloring lovasz_coloring(const Graph& g) {
  const int n = g.n();
  for (Vertex c = 0; c < n; ++c) {
    VertexSet cut(n);
    cut.insert(c);
    if (connected_without(g, cut)) continue;
    // c is a cut vertex: colour each lobe with c last, then align colours at c.
    std::vector<Vertex> rest_ids;
    Graph rest = g.without(cut, &rest_ids);
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    int colours = 0;
    for (const auto& comp : connected_components(rest)) {
      VertexSet piece(n);
      piece.insert(c);
      comp.for_each([&](Vertex v) { piece.insert(rest_ids[static_cast<std::size_t>(v)]); });
      std::vector<Vertex> ids;
      Graph sub = g.induced(piece, &ids);
      const Vertex local_c = static_cast<Vertex>(std::find(ids.begin(), ids.end(), c) - ids.begin());
      Coloring pc = greedy_in_order(sub, reverse_bfs_order(sub, local_c, VertexSet(sub.n())));
      const int at_c = pc.colour[static_cast<std::size_t>(local_c)];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        int k = pc.colour[i];
        if (k == at_c) {
          k = 0;
        } else if (k == 0) {
          k = at_c;
        }
        colour[static_cast<std::size_t>(ids[i])] = k;
        colours = std::max(colours, k + 1);
      }
    }
    return Coloring{colour, colours};
  }
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbours(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const Vertex x = nb[a];
        const Vertex y = nb[b];
        if (g.adjacent(x, y)) continue;
        VertexSet pair(n, {x, y});
        auto order = reverse_bfs_order(g, v, pair);
        if (order.empty()) continue;
        order.insert(order.begin(), {x, y});
        return greedy_in_order(g, order);
      }
    }
  }
  return smallest_last_coloring(g);
}

Coloring color_component(const Graph& c) {
  const int n = c.n();
  if (n == 0) return {};
  if (c.is_complete()) {
    Coloring out{std::vector<int>(static_cast<std::size_t>(n)), n};
    for (int v = 0; v < n; ++v) out.colour[static_cast<std::size_t>(v)] = v;
    return out;
  }
  const int delta = c.max_degree();
  if (delta == 2 && c.is_regular()) {
    // Cycle: walk it, alternate colours, odd length needs a third.
    Coloring out{std::vector<int>(static_cast<std::size_t>(n), -1), n % 2 == 0 ? 2 : 3};
    Vertex prev = -1;
    Vertex cur = 0;
    for (int step = 0; step < n; ++step) {
      out.colour[static_cast<std::size_t>(cur)] = step % 2;
      auto nb = c.neighbours(cur);
      Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    if (n % 2 == 1) out.colour[static_cast<std::size_t>(prev)] = 2;
    return out;
  }
  Coloring sl = smallest_last_coloring(c);
  if (sl.colours <= delta) return sl;
  Coloring lv = lovasz_coloring(c);
  return lv.colours < sl.colours ? lv : sl;
}

}  // namespace

VertexSet Coloring::largest_class(int n) const {
  std::vector<int> count(static_cast<std::size_t>(colours), 0);
  for (int k : colour) ++count[static_cast<std::size_t>(k)];
  const int best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v) {
    if (colour[static_cast<std::size_t>(v)] == best) out.insert(v);
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colour.size()) != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    const int k = c.colour[static_cast<std::size_t>(v)];
    if (k < 0 || k >= c.colours) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.colour[static_cast<std::size_t>(u)] == c.colour[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

Coloring smallest_last_coloring(const Graph& g) { return greedy_in_order(g, smallest_last_order(g)); }

Coloring brooks_coloring(const Graph& g) {
  Coloring out{std::vector<int>(static_cast<std::size_t>(g.n()), 0), g.n() == 0 ? 0 : 1};
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> ids;
    Graph sub = g.induced(comp, &ids);
    Coloring cc = color_component(sub);
    for (std::size_t i = 0; i < ids.size(); ++i) out.colour[static_cast<std::size_t>(ids[i])] = cc.colour[i];
    out.colours = std::max(out.colours, cc.colours);
  }
  return out;
}

VertexSet greedy_min_degree_independent_set(const Graph& g) {
  VertexSet alive = g.all_vertices();
  VertexSet chosen(g.n());
  while (!alive.empty()) {
    Vertex best = -1;
    int best_deg = 0;
    alive.for_each([&](Vertex v) {
      const int d = (g.open_nbhd(v) & alive).size();
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    });
    chosen.insert(best);
    alive -= g.closed_nbhd(best);
  }
  return chosen;
}

VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s) {
  VertexSet blocked = g.closed_nbhd(s);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!blocked.contains(v)) {
      s.insert(v);
      blocked |= g.closed_nbhd(v);
    }
  }
  return s;
}

VertexSet maximal_matching_cover(const Graph& g) {
  VertexSet cover(g.n());
  for (auto [u, v] : g.edges()) {
    if (!cover.contains(u) && !cover.contains(v)) {
      cover.insert(u);
      cover.insert(v);
    }
  }
  return cover;
}

}  // namespace udom
