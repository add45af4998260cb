#include "udom/hypergraph.hpp"

#include <algorithm>

namespace udom {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw FormatError("negative base-set size");
  for (const auto& e : edges_) {
    if (e.universe() != n) throw FormatError("hyperedge over a different base set");
    if (e.empty()) throw FormatError("empty hyperedge");
  }
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& list : edges) {
    VertexSet e(n);
    for (Vertex v : list) {
      if (v < 0 || v >= n) throw FormatError("hyperedge member out of range");
      e.insert(v);
    }
    sets.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(sets));
}

int Hypergraph::max_edge_size() const {
  int d = 0;
  for (const auto& e : edges_) d = std::max(d, e.size());
  return d;
}

VertexSet Hypergraph::covered_vertices() const {
  VertexSet out(n_);
  for (const auto& e : edges_) out |= e;
  return out;
}

std::vector<int> Hypergraph::incident_edges(Vertex v) const {
  std::vector<int> out;
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[static_cast<std::size_t>(i)].contains(v)) out.push_back(i);
  }
  return out;
}

Hypergraph Hypergraph::induced(const VertexSet& keep, std::vector<Vertex>* old_ids) const {
  std::vector<Vertex> new_id(static_cast<std::size_t>(n_), -1);
  std::vector<Vertex> ids;
  keep.for_each([&](Vertex v) {
    new_id[v] = static_cast<Vertex>(ids.size());
    ids.push_back(v);
  });
  const int m = static_cast<int>(ids.size());
  std::vector<VertexSet> es;
  for (const auto& e : edges_) {
    if (!e.is_subset_of(keep)) continue;
    VertexSet r(m);
    e.for_each([&](Vertex v) { r.insert(new_id[v]); });
    es.push_back(std::move(r));
  }
  if (old_ids) *old_ids = ids;
  return Hypergraph(m, std::move(es));
}

Hypergraph closed_neighbourhood_hypergraph(const Graph& g) {
  std::vector<VertexSet> es;
  es.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) es.push_back(g.closed_nbhd(v));
  return Hypergraph(g.n(), std::move(es));
}

}  // namespace udom
