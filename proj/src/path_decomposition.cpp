#include "udom/path_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace udom {

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, b.size() - 1);
  return w;
}

std::vector<VertexSet> NicePathDecomposition::bags() const {
  std::vector<VertexSet> out;
  out.reserve(steps.size());
  VertexSet cur(n);
  for (const auto& s : steps) {
    if (s.kind == NiceStep::Kind::introduce) {
      cur.insert(s.v);
    } else {
      cur.erase(s.v);
    }
    out.push_back(cur);
  }
  return out;
}

int NicePathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags()) w = std::max(w, b.size() - 1);
  return w;
}

PathDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.n());
  if (order.size() != n) throw std::invalid_argument("vertex order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= g.n() || pos[static_cast<std::size_t>(v)] >= 0) {
      throw std::invalid_argument("vertex order must list every vertex once");
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<int> last(n);
  for (Vertex v = 0; v < g.n(); ++v) {
    int l = pos[static_cast<std::size_t>(v)];
    for (Vertex w : g.neighbours(v)) l = std::max(l, pos[static_cast<std::size_t>(w)]);
    last[static_cast<std::size_t>(v)] = l;
  }
  PathDecomposition pd;
  pd.n = g.n();
  VertexSet active(g.n());
  for (std::size_t i = 0; i < n; ++i) {
    active.insert(order[i]);
    pd.bags.push_back(active);
    for (std::size_t j = 0; j <= i; ++j) {
      if (last[static_cast<std::size_t>(order[j])] <= static_cast<int>(i)) active.erase(order[j]);
    }
  }
  return pd;
}

namespace {

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::queue<Vertex> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
  }
  return order;
}

/// Prefers vertices next to the placed part, then fewest unplaced neighbours.
std::vector<Vertex> min_degree_order(const Graph& g) {
  std::vector<Vertex> order;
  VertexSet placed(g.n());
  VertexSet frontier(g.n());
  while (static_cast<int>(order.size()) < g.n()) {
    const VertexSet pool = frontier.empty() ? placed.complement() : frontier;
    Vertex best = -1;
    int best_deg = 0;
    pool.for_each([&](Vertex v) {
      const int d = (g.open_nbhd(v) - placed).size();
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    });
    order.push_back(best);
    placed.insert(best);
    frontier |= g.open_nbhd(best);
    frontier -= placed;
  }
  return order;
}

}  // namespace

PathDecomposition build_path_decomposition(const Graph& g, DecompositionStrategy strategy, std::uint64_t seed) {
  switch (strategy) {
    case DecompositionStrategy::bfs_order:
      return decomposition_from_order(g, bfs_order(g));
    case DecompositionStrategy::min_degree:
      return decomposition_from_order(g, min_degree_order(g));
    case DecompositionStrategy::random_order: {
      std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
      return decomposition_from_order(g, order);
    }
  }
  throw std::invalid_argument("unknown decomposition strategy");
}

DecompositionStrategy parse_strategy(std::string_view name) {
  if (name == "bfs-order") return DecompositionStrategy::bfs_order;
  if (name == "min-degree") return DecompositionStrategy::min_degree;
  if (name == "random-order") return DecompositionStrategy::random_order;
  throw std::invalid_argument("unknown decomposition strategy: " + std::string(name));
}

std::string decomposition_violation(const Graph& g, const PathDecomposition& pd) {
  if (pd.n != g.n()) return "decomposition is over " + std::to_string(pd.n) + " vertices, graph has " + std::to_string(g.n());
  std::vector<int> first(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> last(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t b = 0; b < pd.bags.size(); ++b) {
    if (pd.bags[b].universe() != g.n()) return "bag " + std::to_string(b) + " has the wrong universe";
    std::string err;
    pd.bags[b].for_each([&](Vertex v) {
      auto& f = first[static_cast<std::size_t>(v)];
      auto& l = last[static_cast<std::size_t>(v)];
      if (f < 0) f = static_cast<int>(b);
      if (l >= 0 && l != static_cast<int>(b) - 1 && err.empty()) err = "vertex " + std::to_string(v) + " occurs in non-contiguous bags";
      l = static_cast<int>(b);
    });
    if (!err.empty()) return err;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (first[static_cast<std::size_t>(v)] < 0) return "vertex " + std::to_string(v) + " is in no bag";
  }
  for (const auto& [u, v] : g.edges()) {
    const int lo = std::max(first[static_cast<std::size_t>(u)], first[static_cast<std::size_t>(v)]);
    const int hi = std::min(last[static_cast<std::size_t>(u)], last[static_cast<std::size_t>(v)]);
    if (lo > hi) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
  }
  return "";
}

std::string decomposition_violation(const Graph& g, const NicePathDecomposition& nd) {
  if (nd.n != g.n()) return "decomposition is over " + std::to_string(nd.n) + " vertices, graph has " + std::to_string(g.n());
  std::vector<int> state(static_cast<std::size_t>(g.n()), 0);  // 0 new, 1 in bag, 2 forgotten
  VertexSet bag(g.n());
  for (const auto& s : nd.steps) {
    if (s.v < 0 || s.v >= g.n()) return "step names vertex " + std::to_string(s.v) + " outside the graph";
    auto& st = state[static_cast<std::size_t>(s.v)];
    if (s.kind == NiceStep::Kind::introduce) {
      if (st != 0) return "vertex " + std::to_string(s.v) + " introduced twice";
      // Every earlier neighbour must still be present.
      for (Vertex w : g.neighbours(s.v)) {
        if (state[static_cast<std::size_t>(w)] == 2) {
          return "edge " + std::to_string(s.v) + "-" + std::to_string(w) + " is in no bag";
        }
      }
      st = 1;
    } else {
      if (st != 1) return "vertex " + std::to_string(s.v) + " forgotten while not in the bag";
      st = 2;
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (state[static_cast<std::size_t>(v)] != 2) return "vertex " + std::to_string(v) + " is not introduced and forgotten";
  }
  return "";
}

NicePathDecomposition nicify(const PathDecomposition& pd) {
  NicePathDecomposition nd;
  nd.n = pd.n;
  VertexSet cur(pd.n);
  VertexSet gone(pd.n);
  auto advance = [&](const VertexSet& next) {
    (cur - next).for_each([&](Vertex v) {
      nd.steps.push_back({NiceStep::Kind::forget, v});
      gone.insert(v);
    });
    const VertexSet fresh = next - cur;
    if (fresh.intersects(gone)) throw std::invalid_argument("invalid path decomposition: a vertex reappears after leaving");
    fresh.for_each([&](Vertex v) { nd.steps.push_back({NiceStep::Kind::introduce, v}); });
    cur = next;
  };
  for (const auto& b : pd.bags) {
    if (b.universe() != pd.n) throw std::invalid_argument("invalid path decomposition: bag universe mismatch");
    advance(b);
  }
  advance(VertexSet(pd.n));
  return nd;
}

NicePathDecomposition reverse(const NicePathDecomposition& nd) {
  NicePathDecomposition out;
  out.n = nd.n;
  for (auto it = nd.steps.rbegin(); it != nd.steps.rend(); ++it) {
    const auto kind = it->kind == NiceStep::Kind::introduce ? NiceStep::Kind::forget : NiceStep::Kind::introduce;
    out.steps.push_back({kind, it->v});
  }
  return out;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

long parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size()) throw FormatError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

PathDecomposition parse_path_decomposition(std::string_view text, bool one_based) {
  std::istringstream in{std::string(text)};
  PathDecomposition pd;
  long declared_bags = -1;
  long declared_size = 0;
  std::vector<bool> filled;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (declared_bags >= 0) throw FormatError("line " + std::to_string(line_no) + ": duplicate header");
      if (tok.size() != 5 || tok[1] != "pd") throw FormatError("line " + std::to_string(line_no) + ": expected 's pd <bags> <width+1> <n>'");
      declared_bags = parse_int(tok[2], line_no);
      declared_size = parse_int(tok[3], line_no);
      const long n = parse_int(tok[4], line_no);
      if (declared_bags < 0 || declared_size < 0 || n < 0) throw FormatError("line " + std::to_string(line_no) + ": negative count");
      pd.n = static_cast<int>(n);
      pd.bags.assign(static_cast<std::size_t>(declared_bags), VertexSet(pd.n));
      filled.assign(static_cast<std::size_t>(declared_bags), false);
      continue;
    }
    if (tok[0] != "b") throw FormatError("line " + std::to_string(line_no) + ": unknown line type '" + tok[0] + "'");
    if (declared_bags < 0) throw FormatError("line " + std::to_string(line_no) + ": bag before header");
    if (tok.size() < 2) throw FormatError("line " + std::to_string(line_no) + ": missing bag id");
    const long id = parse_int(tok[1], line_no);
    if (id < 1 || id > declared_bags) throw FormatError("line " + std::to_string(line_no) + ": bag id out of range");
    if (filled[static_cast<std::size_t>(id - 1)]) throw FormatError("line " + std::to_string(line_no) + ": bag listed twice");
    filled[static_cast<std::size_t>(id - 1)] = true;
    if (static_cast<long>(tok.size()) - 2 > declared_size) {
      throw FormatError("line " + std::to_string(line_no) + ": bag larger than declared width");
    }
    for (std::size_t t = 2; t < tok.size(); ++t) {
      long v = parse_int(tok[t], line_no) - (one_based ? 1 : 0);
      if (v < 0 || v >= pd.n) throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
      pd.bags[static_cast<std::size_t>(id - 1)].insert(static_cast<Vertex>(v));
    }
  }
  if (declared_bags < 0) throw FormatError("missing 's pd' header");
  for (std::size_t b = 0; b < filled.size(); ++b) {
    if (!filled[b]) throw FormatError("bag " + std::to_string(b + 1) + " is missing");
  }
  return pd;
}

std::string serialize_path_decomposition(const PathDecomposition& pd) {
  std::ostringstream out;
  out << "s pd " << pd.bags.size() << ' ' << pd.width() + 1 << ' ' << pd.n << '\n';
  for (std::size_t b = 0; b < pd.bags.size(); ++b) {
    out << "b " << b + 1;
    pd.bags[b].for_each([&](Vertex v) { out << ' ' << v; });
    out << '\n';
  }
  return out.str();
}

NicePathDecomposition parse_nice_steps(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  NicePathDecomposition nd;
  nd.n = n;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok.size() != 2 || (tok[0] != "i" && tok[0] != "f")) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 'i <v>' or 'f <v>'");
    }
    const long v = parse_int(tok[1], line_no);
    if (v < 0 || v >= n) throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
    nd.steps.push_back({tok[0] == "i" ? NiceStep::Kind::introduce : NiceStep::Kind::forget, static_cast<Vertex>(v)});
  }
  return nd;
}

std::string serialize_nice_steps(const NicePathDecomposition& nd) {
  std::ostringstream out;
  for (const auto& s : nd.steps) out << (s.kind == NiceStep::Kind::introduce ? "i " : "f ") << s.v << '\n';
  return out.str();
}

}  // namespace udom
