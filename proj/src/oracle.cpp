#include "udom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>
#include <vector>

#include "udom/validate.hpp"

namespace udom {

std::string SolveReport::to_record() const {
  std::ostringstream os;
  os << "value " << value << '\n';
  os << "witness " << witness.to_string() << '\n';
  os << "nodes " << nodes_explored << '\n';
  os << "time_ms " << elapsed_ms() << '\n';
  return os.str();
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) out[static_cast<std::size_t>(v)] = g.closed_nbhd(v).word0();
  return out;
}

void check_cap(int n, int cap, const char* what) {
  if (cap > 64) throw CapExceeded(std::string(what) + ": caps above 64 vertices are not supported");
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
}

/// Members of `set` whose closed neighbourhood meets the once-covered region.
bool irredundant(const std::vector<Mask>& closed, Mask set) {
  Mask once = 0;
  Mask twice = 0;
  for (Mask s = set; s; s &= s - 1) {
    const Mask c = closed[static_cast<std::size_t>(std::countr_zero(s))];
    twice |= once & c;
    once |= c;
  }
  const Mask only = once & ~twice;
  for (Mask s = set; s; s &= s - 1) {
    if ((closed[static_cast<std::size_t>(std::countr_zero(s))] & only) == 0) return false;
  }
  return true;
}

struct DomSearch {
  const std::vector<Mask>& closed;
  Mask full;
  std::uint64_t nodes = 0;
  const std::function<bool(Mask)>& on_leaf;  // return true to stop

  bool run(Mask chosen, Mask forbidden, Mask dominated) {
    ++nodes;
    if (!irredundant(closed, chosen)) return false;
    const Mask undominated = full & ~dominated;
    if (undominated == 0) return on_leaf(chosen);
    const int u = std::countr_zero(undominated);
    Mask candidates = closed[static_cast<std::size_t>(u)] & ~forbidden;
    Mask earlier = 0;
    for (Mask c = candidates; c; c &= c - 1) {
      const int x = std::countr_zero(c);
      if (run(chosen | bit(x), forbidden | earlier, dominated | closed[static_cast<std::size_t>(x)])) return true;
      earlier |= bit(x);
    }
    return false;
  }
};

struct ScanTotals {
  int ir = INT_MAX;
  int gamma = INT_MAX;
  int i = INT_MAX;
  int alpha = 0;
  int Gamma = 0;
  int IR = 0;
};

std::vector<std::uint8_t> irredundance_table_serial(const std::vector<Mask>& closed, int n) {
  const Mask count = Mask{1} << n;
  std::vector<std::uint8_t> irr(count);
  for (Mask s = 0; s < count; ++s) irr[s] = irredundant(closed, s) ? 1 : 0;
  return irr;
}

ScanTotals scan_serial(const std::vector<Mask>& closed, int n, const std::vector<std::uint8_t>& irr) {
  const Mask count = Mask{1} << n;
  const Mask full = count - 1;
  ScanTotals t;
  for (Mask s = 0; s < count; ++s) {
    Mask cover = 0;
    bool independent = true;
    for (Mask r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      cover |= closed[static_cast<std::size_t>(v)];
      if (closed[static_cast<std::size_t>(v)] & s & ~bit(v)) independent = false;
    }
    const int size = std::popcount(s);
    const bool dominating = cover == full;
    if (dominating) t.gamma = std::min(t.gamma, size);
    if (independent) t.alpha = std::max(t.alpha, size);
    if (independent && dominating) t.i = std::min(t.i, size);
    if (irr[s]) {
      t.IR = std::max(t.IR, size);
      if (dominating) t.Gamma = std::max(t.Gamma, size);
      bool maximal = true;
      for (Mask r = full & ~s; r && maximal; r &= r - 1) {
        if (irr[s | (r & -r)]) maximal = false;
      }
      if (maximal) t.ir = std::min(t.ir, size);
    }
  }
  return t;
}

#ifdef UDOM_HAVE_OPENMP
std::vector<std::uint8_t> irredundance_table_parallel(const std::vector<Mask>& closed, int n) {
  const long long count = 1LL << n;
  std::vector<std::uint8_t> irr(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (long long s = 0; s < count; ++s) irr[static_cast<std::size_t>(s)] = irredundant(closed, static_cast<Mask>(s)) ? 1 : 0;
  return irr;
}

ScanTotals scan_parallel(const std::vector<Mask>& closed, int n, const std::vector<std::uint8_t>& irr) {
  const long long count = 1LL << n;
  const Mask full = static_cast<Mask>(count) - 1;
  int ir = INT_MAX, gamma = INT_MAX, ind_dom = INT_MAX, alpha = 0, Gamma = 0, IR = 0;
#pragma omp parallel for schedule(static) reduction(min : ir, gamma, ind_dom) reduction(max : alpha, Gamma, IR)
  for (long long si = 0; si < count; ++si) {
    const Mask s = static_cast<Mask>(si);
    Mask cover = 0;
    bool independent = true;
    for (Mask r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      cover |= closed[static_cast<std::size_t>(v)];
      if (closed[static_cast<std::size_t>(v)] & s & ~bit(v)) independent = false;
    }
    const int size = std::popcount(s);
    const bool dominating = cover == full;
    if (dominating) gamma = std::min(gamma, size);
    if (independent) alpha = std::max(alpha, size);
    if (independent && dominating) ind_dom = std::min(ind_dom, size);
    if (irr[s]) {
      IR = std::max(IR, size);
      if (dominating) Gamma = std::max(Gamma, size);
      bool maximal = true;
      for (Mask r = full & ~s; r && maximal; r &= r - 1) {
        if (irr[s | (r & -r)]) maximal = false;
      }
      if (maximal) ir = std::min(ir, size);
    }
  }
  return ScanTotals{ir, gamma, ind_dom, alpha, Gamma, IR};
}
#endif

}  // namespace

std::uint64_t enumerate_minimal_dominating_sets(const Graph& g, const std::function<void(const VertexSet&)>& visitor,
                                                const OracleCaps& caps) {
  check_cap(g.n(), caps.enumerate_n, "enumerate_minimal_dominating_sets");
  const auto closed = closed_masks(g);
  std::uint64_t count = 0;
  std::function<bool(Mask)> leaf = [&](Mask d) {
    ++count;
    visitor(VertexSet::from_word(g.n(), d));
    return false;
  };
  DomSearch search{closed, g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1, 0, leaf};
  search.run(0, 0, 0);
  return count;
}

SolveReport upper_domination_exact(const Graph& g, const OracleCaps& caps) {
  check_cap(g.n(), caps.enumerate_n, "upper_domination_exact");
  Stopwatch clock;
  const auto closed = closed_masks(g);
  Mask best = 0;
  int best_size = -1;
  std::function<bool(Mask)> leaf = [&](Mask d) {
    const int size = std::popcount(d);
    if (size > best_size) {
      best_size = size;
      best = d;
    }
    return false;
  };
  DomSearch search{closed, g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1, 0, leaf};
  search.run(0, 0, 0);
  SolveReport r;
  r.value = std::max(best_size, 0);
  r.witness = VertexSet::from_word(g.n(), best);
  r.nodes_explored = search.nodes;
  r.elapsed = clock.elapsed();
  return r;
}

ChainValues chain_values(const Graph& g, Exec exec, const OracleCaps& caps) {
  check_cap(g.n(), std::min(caps.chain_n, 30), "chain_values");
  const int n = g.n();
  if (n == 0) return {};
  const auto closed = closed_masks(g);
  ScanTotals t;
#ifdef UDOM_HAVE_OPENMP
  if (exec == Exec::parallel) {
    t = scan_parallel(closed, n, irredundance_table_parallel(closed, n));
  } else {
    t = scan_serial(closed, n, irredundance_table_serial(closed, n));
  }
#else
  (void)exec;
  t = scan_serial(closed, n, irredundance_table_serial(closed, n));
#endif
  return ChainValues{t.ir, t.gamma, t.i, t.alpha, t.Gamma, t.IR};
}

MdseResult mdse_decide(const Graph& g, const VertexSet& s, const OracleCaps& caps) {
  check_cap(g.n(), caps.mdse_n, "mdse_decide");
  const auto closed = closed_masks(g);
  const Mask start = s.word0();
  Mask dominated = 0;
  for (Mask r = start; r; r &= r - 1) dominated |= closed[static_cast<std::size_t>(std::countr_zero(r))];
  MdseResult result;
  Mask found = 0;
  std::function<bool(Mask)> leaf = [&](Mask d) {
    found = d;
    return true;
  };
  DomSearch search{closed, g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1, 0, leaf};
  result.exists = search.run(start, 0, dominated);
  result.nodes_explored = search.nodes;
  if (result.exists) result.witness = VertexSet::from_word(g.n(), found);
  return result;
}

SolveReport mmhs_exact(const Hypergraph& h, const OracleCaps& caps) {
  check_cap(h.n(), caps.mmhs_n, "mmhs_exact");
  Stopwatch clock;
  std::vector<Mask> edges;
  edges.reserve(static_cast<std::size_t>(h.edge_count()));
  for (const auto& e : h.edges()) edges.push_back(e.word0());

  std::uint64_t nodes = 0;
  Mask best = 0;
  int best_size = -1;

  // Every chosen vertex needs an edge it hits alone.
  auto irredundant_h = [&](Mask chosen) {
    Mask has_private = 0;
    for (Mask e : edges) {
      const Mask hit = e & chosen;
      if (hit && (hit & (hit - 1)) == 0) has_private |= hit;
    }
    return (chosen & ~has_private) == 0;
  };

  std::function<void(Mask, Mask)> run = [&](Mask chosen, Mask forbidden) {
    ++nodes;
    if (!irredundant_h(chosen)) return;
    const Mask* unhit = nullptr;
    for (const Mask& e : edges) {
      if ((e & chosen) == 0) {
        unhit = &e;
        break;
      }
    }
    if (unhit == nullptr) {
      const int size = std::popcount(chosen);
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    Mask earlier = 0;
    for (Mask c = *unhit & ~forbidden; c; c &= c - 1) {
      const Mask x = c & -c;
      run(chosen | x, forbidden | earlier);
      earlier |= x;
    }
  };
  run(0, 0);

  SolveReport r;
  r.value = std::max(best_size, 0);
  r.witness = VertexSet::from_word(h.n(), best);
  r.nodes_explored = nodes;
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace udom
