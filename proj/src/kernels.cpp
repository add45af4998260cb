#include "udom/kernels.hpp"

#include <algorithm>

#include "udom/coloring.hpp"
#include "udom/rational.hpp"
#include "udom/validate.hpp"

namespace udom {

namespace {

KernelResult decided(bool answer, std::vector<KernelStep> trace, std::optional<VertexSet> certificate = std::nullopt) {
  KernelResult r;
  r.outcome = KernelResult::Outcome::decided;
  r.answer = answer;
  r.trace = std::move(trace);
  r.certificate = std::move(certificate);
  return r;
}

KernelResult reduced(const Graph& g, const VertexSet& keep, int parameter, std::vector<KernelStep> trace) {
  KernelResult r;
  r.outcome = KernelResult::Outcome::reduced;
  r.graph = g.induced(keep, &r.kept);
  r.parameter = parameter;
  r.trace = std::move(trace);
  return r;
}

bool is_cycle_component(const Graph& c) { return c.n() >= 3 && c.is_regular() && c.max_degree() == 2; }

/// Every other vertex along the cycle starting at local vertex 0.
VertexSet cycle_witness(const Graph& c) {
  VertexSet out(c.n());
  Vertex prev = -1;
  Vertex cur = 0;
  for (int step = 0; step < c.n(); ++step) {
    if (step % 2 == 0 && step + 1 < c.n()) out.insert(cur);
    auto nb = c.neighbours(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

KernelResult coud_kernelize(const Graph& g, int ell) {
  std::vector<KernelStep> trace;
  VertexSet alive = g.all_vertices();
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int param = ell;
  if (param < 0) return decided(false, std::move(trace));

  auto remove = [&](Vertex v) {
    alive.erase(v);
    for (Vertex w : g.neighbours(v)) {
      if (alive.contains(w)) --deg[static_cast<std::size_t>(w)];
    }
  };

  bool changed = true;
  while (changed) {
    changed = false;
    while (true) {
      Vertex best = -1;
      alive.for_each([&](Vertex v) {
        if (deg[static_cast<std::size_t>(v)] > param && (best < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(best)])) {
          best = v;
        }
      });
      if (best < 0) break;
      remove(best);
      --param;
      trace.push_back({"high-degree", best, param});
      changed = true;
      if (param < 0) return decided(false, std::move(trace));
    }
    alive.for_each([&](Vertex v) {
      if (deg[static_cast<std::size_t>(v)] == 0) {
        remove(v);
        trace.push_back({"isolated", v, param});
        changed = true;
      }
    });
  }

  int edges = 0;
  alive.for_each([&](Vertex v) { edges += deg[static_cast<std::size_t>(v)]; });
  edges /= 2;
  const long long p = param;
  if (alive.size() > p * (p + 1) || edges > p * p) {
    trace.push_back({"size-bound", -1, param});
    return decided(false, std::move(trace));
  }
  return reduced(g, alive, param, std::move(trace));
}

KernelResult ud_kernel_brooks(const Graph& g, int k) {
  std::vector<KernelStep> trace;
  VertexSet rest(g.n());
  VertexSet certificate(g.n());
  int param = k;
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> ids;
    Graph c = g.induced(comp, &ids);
    if (c.is_complete()) {
      certificate.insert(ids.front());
      --param;
      trace.push_back({"clique", ids.front(), param});
    } else if (is_cycle_component(c)) {
      VertexSet w = cycle_witness(c);
      w.for_each([&](Vertex v) { certificate.insert(ids[static_cast<std::size_t>(v)]); });
      param -= w.size();
      trace.push_back({"cycle", ids.front(), param});
    } else {
      rest |= comp;
    }
  }
  if (param <= 0) {
    std::vector<Vertex> ids;
    const Graph r = g.induced(rest, &ids);
    extend_to_maximal_independent(r, r.empty_set()).for_each([&](Vertex v) { certificate.insert(ids[static_cast<std::size_t>(v)]); });
    return decided(true, std::move(trace), certificate);
  }
  if (rest.empty()) return decided(false, std::move(trace));

  std::vector<Vertex> ids;
  Graph kernel = g.induced(rest, &ids);
  const int delta = kernel.max_degree();
  if (Rational(param) <= Rational(kernel.n(), delta)) {
    // Largest Brooks class, extended, is a minimal dominating set of size >= n/Δ.
    for (const auto& comp : connected_components(kernel)) {
      std::vector<Vertex> local;
      Graph c = kernel.induced(comp, &local);
      Coloring col = brooks_coloring(c);
      VertexSet is = extend_to_maximal_independent(c, col.largest_class(c.n()));
      is.for_each([&](Vertex v) { certificate.insert(ids[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])]); });
    }
    trace.push_back({"brooks-colouring", -1, param});
    return decided(true, std::move(trace), certificate);
  }
  return reduced(g, rest, param, std::move(trace));
}

KernelResult coud_kernel_degree(const Graph& g, int ell) {
  std::vector<KernelStep> trace;
  if (ell < 0) return decided(false, std::move(trace));
  VertexSet rest(g.n());
  int param = ell;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      trace.push_back({"isolated", comp.first(), param});
      continue;
    }
    std::vector<Vertex> ids;
    Graph c = g.induced(comp, &ids);
    bool trivial = false;
    for (Vertex v = 0; v < c.n() && !trivial; ++v) {
      if (c.degree(v) != c.n() - 1) continue;
      VertexSet others = c.all_vertices();
      others.erase(v);
      trivial = is_minimal_dominating(c, others);
    }
    if (trivial) {
      --param;
      trace.push_back({"trivial-component", ids.front(), param});
      if (param < 0) return decided(false, std::move(trace));
    } else {
      rest |= comp;
    }
  }
  if (rest.empty()) return decided(true, std::move(trace));
  std::vector<Vertex> ids;
  const Graph kernel = g.induced(rest, &ids);
  const Rational limit = Rational(2 * kernel.max_degree() + 1, 2) * Rational(param);
  if (Rational(kernel.n()) > limit) {
    trace.push_back({"size-bound", -1, param});
    return decided(false, std::move(trace));
  }
  return reduced(g, rest, param, std::move(trace));
}

Graph replay_trace(const Graph& g, const std::vector<KernelStep>& trace) {
  VertexSet removed(g.n());
  for (const auto& step : trace) {
    if (step.vertex < 0) continue;
    if (step.rule == "high-degree" || step.rule == "isolated") {
      removed.insert(step.vertex);
    }
  }
  return g.without(removed);
}

}  // namespace udom
