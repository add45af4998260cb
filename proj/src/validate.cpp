#include "udom/validate.hpp"

#include <stdexcept>

namespace udom {

bool is_dominating(const Graph& g, const VertexSet& d) { return g.closed_nbhd(d) == g.all_vertices(); }

VertexSet covered_once(const Graph& g, const VertexSet& s) {
  VertexSet once(g.n());
  VertexSet twice(g.n());
  s.for_each([&](Vertex v) {
    twice |= once & g.closed_nbhd(v);
    once |= g.closed_nbhd(v);
  });
  return once - twice;
}

VertexSet private_neighbours(const Graph& g, const VertexSet& s, Vertex v) {
  if (v < 0 || v >= g.n() || !s.contains(v)) throw std::invalid_argument("vertex is not a member of the set");
  VertexSet others = s;
  others.erase(v);
  return g.closed_nbhd(v) - g.closed_nbhd(others);
}

bool is_irredundant(const Graph& g, const VertexSet& s) {
  const VertexSet once = covered_once(g, s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !g.closed_nbhd(v).intersects(once)) ok = false;
  });
  return ok;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) { return is_dominating(g, d) && is_irredundant(g, d); }

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.open_nbhd(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) { return is_independent(g, s) && is_dominating(g, s); }

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges()) {
    if (!s.contains(u) && !s.contains(v)) return false;
  }
  return true;
}

bool is_hitting_set(const Hypergraph& h, const VertexSet& s) {
  for (const auto& e : h.edges()) {
    if (!e.intersects(s)) return false;
  }
  return true;
}

bool is_minimal_hitting_set(const Hypergraph& h, const VertexSet& s) {
  if (!is_hitting_set(h, s)) return false;
  VertexSet has_private(h.n());
  for (const auto& e : h.edges()) {
    VertexSet hit = e & s;
    if (hit.size() == 1) has_private |= hit;
  }
  return s.is_subset_of(has_private);
}

}  // namespace udom
