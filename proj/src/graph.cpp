#include "udom/graph.hpp"

#include <algorithm>
#include <string>

namespace udom {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw FormatError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  open_.reserve(adj_.size());
  closed_.reserve(adj_.size());
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    m_ += static_cast<int>(list.size());
    open_.push_back(VertexSet::from_vector(n, list));
    closed_.push_back(open_.back());
    closed_.back().insert(v);
  }
  m_ /= 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

VertexSet Graph::closed_nbhd(const VertexSet& s) const {
  VertexSet out(n_);
  s.for_each([&](Vertex v) { out |= closed_[v]; });
  return out;
}

VertexSet Graph::open_nbhd(const VertexSet& s) const {
  VertexSet out(n_);
  s.for_each([&](Vertex v) { out |= open_[v]; });
  return out - s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* old_ids) const {
  std::vector<Vertex> new_id(static_cast<std::size_t>(n_), -1);
  std::vector<Vertex> ids;
  keep.for_each([&](Vertex v) {
    new_id[v] = static_cast<Vertex>(ids.size());
    ids.push_back(v);
  });
  std::vector<Edge> es;
  for (auto [u, v] : edges()) {
    if (new_id[u] >= 0 && new_id[v] >= 0) es.emplace_back(new_id[u], new_id[v]);
  }
  if (old_ids) *old_ids = ids;
  return Graph(static_cast<int>(ids.size()), es);
}

Graph Graph::without(const VertexSet& removed, std::vector<Vertex>* old_ids) const {
  return induced(all_vertices() - removed, old_ids);
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  std::vector<Edge> es;
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(n_, es);
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

bool Graph::is_complete() const { return n_ == 0 || min_degree() == n_ - 1; }

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.mean_degree = g.n() == 0 ? 0.0 : 2.0 * g.edge_count() / g.n();
  s.regular = g.is_regular();
  return s;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.n());
    stack.push_back(s);
    seen.insert(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

}  // namespace udom
