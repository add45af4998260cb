#include "udom/branching.hpp"

#include <algorithm>
#include <sstream>

#include "udom/bounds.hpp"
#include "udom/coloring.hpp"
#include "udom/validate.hpp"

namespace udom {

std::uint64_t SearchStats::total() const {
  std::uint64_t t = 0;
  for (auto c : rule_nodes) t += c;
  return t;
}

std::string SearchStats::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rule_nodes.size(); ++r) out << kCoudRuleNames[r] << '=' << rule_nodes[r] << ' ';
  out << "max_depth=" << max_depth;
  return out.str();
}

namespace {

class CoudSearch {
 public:
  CoudSearch(const Graph& g, int ell) : g_(g), target_(g.n() - ell) {}

  bool run(int ell) {
    return visit(g_.empty_set(), g_.empty_set(), g_.empty_set(), 2 * ell, 0);
  }

  SearchStats stats;
  VertexSet witness;

 private:
  void count(CoudRule r) { ++stats.rule_nodes[static_cast<std::size_t>(r)]; }

  /// `floor` is the least decrease the firing rule is allowed to charge.
  bool child(const VertexSet& f, const VertexSet& i, const VertexSet& dbar, int parent, int charge, int floor,
             int depth) {
    const int budget = parent - charge;
    if (budget > parent || parent - budget < floor) ++stats.budget_violations;
    return visit(f, i, dbar, budget, depth + 1);
  }

  static VertexSet with(VertexSet s, Vertex v) {
    s.insert(v);
    return s;
  }

  bool visit(const VertexSet& f, const VertexSet& i, const VertexSet& dbar, int budget2, int depth) {
    stats.max_depth = std::max(stats.max_depth, depth);
    if (budget2 < 0) {
      count(CoudRule::H1);
      return false;
    }
    const VertexSet r = (f | i | dbar).complement();
    if (r.empty()) {
      count(CoudRule::H2);
      const VertexSet d = f | i;
      if (d.size() >= target_ && is_minimal_dominating(g_, d)) {
        witness = d;
        return true;
      }
      return false;
    }
    for (Vertex v = r.first(); v >= 0; v = r.next(v)) {
      if (g_.open_nbhd(v).is_subset_of(dbar)) {
        count(CoudRule::R1);
        return visit(f, with(i, v), dbar, budget2, depth + 1);
      }
    }
    for (Vertex v = r.first(); v >= 0; v = r.next(v)) {
      if (g_.open_nbhd(v).intersects(f)) {
        count(CoudRule::B1);
        return child(with(f, v), i, dbar, budget2, 1, 1, depth) || child(f, i, with(dbar, v), budget2, 1, 1, depth);
      }
    }
    for (Vertex v = r.first(); v >= 0; v = r.next(v)) {
      const VertexSet nr = g_.open_nbhd(v) & r;
      if (nr.size() == 1) {
        count(CoudRule::B2);
        const Vertex u = nr.first();
        return child(with(with(f, u), v), i, dbar, budget2, 2, 2, depth) ||
               child(with(f, u), i, with(dbar, v), budget2, 2, 2, depth) ||
               child(f, with(i, v), with(dbar, u), budget2, 2, 2, depth);
      }
    }
    count(CoudRule::B3);
    const Vertex v = r.first();
    return child(f, with(i, v), dbar | g_.open_nbhd(v), budget2, 4, 4, depth) ||
           child(with(f, v), i, dbar, budget2, 1, 1, depth) || child(f, i, with(dbar, v), budget2, 1, 1, depth);
  }

  const Graph& g_;
  int target_;
};

class UdSearch {
 public:
  UdSearch(const Graph& g, int k) : g_(g), k_(k) {}

  bool visit(const VertexSet& d, const VertexSet& priv, const VertexSet& dominated) {
    ++nodes;
    const VertexSet undominated = dominated.complement();
    // Every further member needs its own, currently undominated, private neighbour.
    if (k_ - d.size() > undominated.size()) return false;
    if (d.size() >= k_) return complete(d, priv);
    const Vertex u = undominated.first();
    const VertexSet blocked = g_.closed_nbhd(priv);
    const VertexSet& cand = g_.closed_nbhd(u);
    for (Vertex x = cand.first(); x >= 0; x = cand.next(x)) {
      if (blocked.contains(x)) continue;
      const VertexSet choices = g_.closed_nbhd(x) - dominated;
      for (Vertex p = choices.first(); p >= 0; p = choices.next(p)) {
        VertexSet d2 = d;
        d2.insert(x);
        VertexSet priv2 = priv;
        priv2.insert(p);
        if (visit(d2, priv2, dominated | g_.closed_nbhd(x))) return true;
      }
    }
    return false;
  }

  std::uint64_t nodes = 0;
  VertexSet witness;

 private:
  bool complete(const VertexSet& d, const VertexSet& priv) {
    const VertexSet allowed = g_.closed_nbhd(priv).complement();
    VertexSet s = d;
    VertexSet dominated = g_.closed_nbhd(d);
    for (Vertex v = allowed.first(); v >= 0 && dominated.size() < g_.n(); v = allowed.next(v)) {
      if (s.contains(v) || g_.closed_nbhd(v).is_subset_of(dominated)) continue;
      s.insert(v);
      dominated |= g_.closed_nbhd(v);
    }
    if (dominated.size() < g_.n()) return false;
    for (Vertex v = s.last(); v >= 0; --v) {
      if (!s.contains(v) || d.contains(v)) continue;
      s.erase(v);
      if (!is_dominating(g_, s)) s.insert(v);
    }
    if (s.size() >= k_ && is_minimal_dominating(g_, s)) {
      witness = s;
      return true;
    }
    return false;
  }

  const Graph& g_;
  int k_;
};

/// Sum over components of the floored degree-aware upper bound on Gamma,
/// with alpha bounded by n minus a maximal matching.
int component_gamma_bound(const Graph& g) {
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    Graph c = g.induced(comp);
    if (c.n() == 1) {
      total += 1;
      continue;
    }
    const int alpha_hat = c.n() - maximal_matching_cover(c).size() / 2;
    int best = c.n();
    for (int t = 1; t <= c.n(); ++t) {
      if (prune(c.n(), alpha_hat, c.max_degree(), c.min_degree(), t)) {
        best = t - 1;
        break;
      }
    }
    total += best;
  }
  return total;
}

}  // namespace

BranchResult compute_coud(const Graph& g, int ell) {
  Stopwatch clock;
  BranchResult out;
  if (ell < 0) {
    out.stats.rule_nodes[static_cast<std::size_t>(CoudRule::H1)] = 1;
  } else {
    CoudSearch search(g, ell);
    out.yes = search.run(ell);
    out.stats = search.stats;
    if (out.yes) {
      out.report.witness = search.witness;
      out.report.value = search.witness.size();
    }
  }
  out.report.nodes_explored = out.stats.total();
  out.report.elapsed = clock.elapsed();
  return out;
}

BranchResult ud_bounded_degree(const Graph& g, int k) {
  Stopwatch clock;
  BranchResult out;
  if (k <= 0) {
    out.yes = true;
    if (g.n() > 0) {
      out.report.witness = extend_to_maximal_independent(g, g.empty_set());
      out.report.value = out.report.witness.size();
    }
  } else if (k <= g.n() && k <= component_gamma_bound(g)) {
    UdSearch search(g, k);
    out.yes = search.visit(g.empty_set(), g.empty_set(), g.empty_set());
    out.report.nodes_explored = search.nodes;
    if (out.yes) {
      out.report.witness = search.witness;
      out.report.value = search.witness.size();
    }
  }
  out.report.elapsed = clock.elapsed();
  return out;
}

}  // namespace udom
