#include "udom/fipo.hpp"

#include <stdexcept>

#include "udom/validate.hpp"

namespace udom {

FipoPartition fipo_decompose(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.n() || !is_minimal_dominating(g, d)) {
    throw std::invalid_argument("fipo_decompose needs a minimal dominating set");
  }
  FipoPartition out{VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n()),
                    std::vector<Vertex>(static_cast<std::size_t>(g.n()), -1)};
  d.for_each([&](Vertex v) {
    if (g.open_nbhd(v).intersects(d)) {
      out.f.insert(v);
    } else {
      out.i.insert(v);
    }
  });
  // External private neighbours of distinct F vertices are disjoint, so the
  // greedy choice never collides.
  out.f.for_each([&](Vertex v) {
    const VertexSet external = private_neighbours(g, d, v) - d;
    const Vertex w = external.first();
    out.p.insert(w);
    out.matched_to[v] = w;
  });
  out.o = g.all_vertices() - d - out.p;
  return out;
}

std::string fipo_violation(const Graph& g, const FipoPartition& fp) {
  const VertexSet all = g.all_vertices();
  if ((fp.f | fp.i | fp.p | fp.o) != all) return "parts do not cover V";
  if (fp.f.intersects(fp.i) || fp.f.intersects(fp.p) || fp.f.intersects(fp.o) || fp.i.intersects(fp.p) ||
      fp.i.intersects(fp.o) || fp.p.intersects(fp.o)) {
    return "parts are not disjoint";
  }
  if (fp.f.size() != fp.p.size()) return "|F| != |P|";
  const VertexSet d = fp.dominating_set();
  VertexSet image(g.n());
  std::string problem;
  fp.f.for_each([&](Vertex v) {
    if (!problem.empty()) return;
    const Vertex w = fp.matched_to[static_cast<std::size_t>(v)];
    if (w < 0 || !fp.p.contains(w) || image.contains(w)) {
      problem = "matching F->P is not a bijection";
      return;
    }
    image.insert(w);
    if (!g.open_nbhd(v).intersects(fp.f)) {
      problem = "F vertex " + std::to_string(v) + " has no friend in F";
      return;
    }
    if (!private_neighbours(g, d, v).contains(w)) {
      problem = "partner of " + std::to_string(v) + " is not its private neighbour";
    }
  });
  if (!problem.empty()) return problem;
  if (!is_independent(g, fp.i)) return "I is not independent";
  if (!g.open_nbhd(fp.i).is_subset_of(fp.o)) return "N(I) is not inside O";
  return {};
}

}  // namespace udom
