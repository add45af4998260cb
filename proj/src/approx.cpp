#include "udom/approx.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "udom/coloring.hpp"
#include "udom/validate.hpp"

namespace udom {

Rational ApproxReport::ratio_at(const Rational& rho) const {
  if (delta == 0) return rho;
  const Rational second = (Rational(delta) * rho * Rational(colours) + Rational(delta - 1)) / (Rational(2 * delta) * rho);
  return max(rho, second);
}

VertexSet minimalize(const VertexSet& s, const std::function<bool(const VertexSet&)>& valid, const VertexSet* keep) {
  if (!valid(s)) throw std::invalid_argument("minimalize: input does not satisfy the property");
  VertexSet out = s;
  for (Vertex v = out.last(); v >= 0; --v) {
    if (!out.contains(v) || (keep != nullptr && keep->contains(v))) continue;
    out.erase(v);
    if (!valid(out)) out.insert(v);
  }
  return out;
}

VertexSet minimalize_dominating(const Graph& g, const VertexSet& s, const VertexSet* keep) {
  return minimalize(s, [&](const VertexSet& x) { return is_dominating(g, x); }, keep);
}

VertexSet minimalize_hitting(const Hypergraph& h, const VertexSet& s, const VertexSet* keep) {
  return minimalize(s, [&](const VertexSet& x) { return is_hitting_set(h, x); }, keep);
}

ApproxReport coud_4approx(const Graph& g) {
  const VertexSet cover = maximal_matching_cover(g);
  const VertexSet s = extend_to_maximal_independent(g, cover.complement());
  ApproxReport r;
  r.witness = s.complement();
  r.value = r.witness.size();
  r.guarantee = "4";
  r.component = "matching-cover";
  return r;
}

ApproxReport ud_coloring_approx(const Graph& g) {
  ApproxReport r;
  r.witness = g.empty_set();
  r.delta = g.max_degree();
  int greedy_wins = 0;
  int colour_wins = 0;
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> ids;
    const Graph c = g.induced(comp, &ids);
    const VertexSet greedy = extend_to_maximal_independent(c, greedy_min_degree_independent_set(c));
    const Coloring col = brooks_coloring(c);
    const VertexSet by_colour = extend_to_maximal_independent(c, col.largest_class(c.n()));
    r.colours = std::max(r.colours, col.colours);
    const bool take_greedy = greedy.size() >= by_colour.size();
    (take_greedy ? greedy_wins : colour_wins) += 1;
    (take_greedy ? greedy : by_colour).for_each([&](Vertex v) { r.witness.insert(ids[static_cast<std::size_t>(v)]); });
  }
  r.value = r.witness.size();
  r.component = colour_wins == 0 ? "greedy" : (greedy_wins == 0 ? "colouring" : "mixed");
  if (r.delta == 0) {
    r.guarantee = "rho";
  } else {
    const int d = r.delta;
    r.guarantee = "max{rho, (" + std::to_string(d) + "*rho*" + std::to_string(r.colours) + "+" + std::to_string(d - 1) + ")/(" +
                  std::to_string(2 * d) + "*rho)}";
  }
  return r;
}

namespace {

struct MmhsTrace {
  int depth = 0;
  bool matching_exit = false;
};

bool at_least_power(long long base, int exp, long long n) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v >= n) return true;
  }
  return v >= n;
}

/// h has every vertex in some edge.
VertexSet mmhs_covered(const Hypergraph& h, MmhsTrace& trace, int depth) {
  trace.depth = std::max(trace.depth, depth);
  const int n = h.n();
  if (h.edge_count() == 0) return VertexSet(n);
  const int d = h.max_edge_size();
  const VertexSet all = VertexSet::full(n);
  if (d == 1) return all;

  VertexSet hv(n);
  int m = 0;
  for (const auto& e : h.edges()) {
    if (!e.intersects(hv)) {
      hv |= e;
      ++m;
    }
  }
  if (at_least_power(m, d, n)) {
    if (depth == 0) trace.matching_exit = true;
    return minimalize_hitting(h, all);
  }

  // B(S) for every admissible S = e ∩ H.
  std::map<std::vector<Vertex>, VertexSet> seen;
  for (const auto& e : h.edges()) {
    const VertexSet s = e & hv;
    if (s.size() > d - 1) continue;
    const VertexSet outside = e - hv;
    if (outside.empty()) continue;
    auto key = s.to_vector();
    auto it = seen.find(key);
    if (it == seen.end()) {
      bool admissible = true;
      for (const auto& f : h.edges()) {
        if (f.is_subset_of(s)) {
          admissible = false;
          break;
        }
      }
      if (!admissible) continue;
      it = seen.emplace(std::move(key), VertexSet(n)).first;
    }
    it->second |= outside;
  }
  if (seen.empty()) return minimalize_hitting(h, all);

  std::vector<VertexSet> by_size(static_cast<std::size_t>(d), VertexSet(n));
  for (const auto& [key, b] : seen) by_size[key.size()] |= b;
  std::size_t best_s = 1;
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    if (by_size[s].size() > by_size[best_s].size()) best_s = s;
  }
  // std::map iterates keys lexicographically, so the first maximum is the smallest S.
  const std::vector<Vertex>* sm_key = nullptr;
  const VertexSet* sm_seen = nullptr;
  for (const auto& [key, b] : seen) {
    if (key.size() != best_s) continue;
    if (sm_seen == nullptr || b.size() > sm_seen->size()) {
      sm_key = &key;
      sm_seen = &b;
    }
  }
  const VertexSet sm = VertexSet::from_vector(n, *sm_key);
  const VertexSet region = sm | *sm_seen;

  std::vector<VertexSet> sub_edges;
  std::vector<Vertex> sub_ids = sm_seen->to_vector();
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sub_ids.size(); ++i) local[static_cast<std::size_t>(sub_ids[i])] = static_cast<int>(i);
  for (const auto& e : h.edges()) {
    if (!e.is_subset_of(region)) continue;
    VertexSet reduced(static_cast<int>(sub_ids.size()));
    (e - sm).for_each([&](Vertex v) { reduced.insert(local[static_cast<std::size_t>(v)]); });
    sub_edges.push_back(std::move(reduced));
  }
  const Hypergraph sub(static_cast<int>(sub_ids.size()), std::move(sub_edges));
  const VertexSet sub_hit = mmhs_covered(sub, trace, depth + 1);
  VertexSet hprime(n);
  sub_hit.for_each([&](Vertex v) { hprime.insert(sub_ids[static_cast<std::size_t>(v)]); });

  const VertexSet start = (all - region) | hprime;
  return minimalize_hitting(h, start, &hprime);
}

}  // namespace

ApproxReport mmhs_approx(const Hypergraph& h) {
  ApproxReport r;
  std::vector<Vertex> ids;
  const Hypergraph core = h.induced(h.covered_vertices(), &ids);
  MmhsTrace trace;
  const VertexSet local = mmhs_covered(core, trace, 0);
  r.witness = VertexSet(h.n());
  local.for_each([&](Vertex v) { r.witness.insert(ids[static_cast<std::size_t>(v)]); });
  r.value = r.witness.size();
  r.guarantee = "n^(1/" + std::to_string(h.max_edge_size()) + ")";
  r.component = trace.matching_exit ? "disjoint-edges" : "recursion depth " + std::to_string(trace.depth);
  return r;
}

}  // namespace udom
