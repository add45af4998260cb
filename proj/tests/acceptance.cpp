// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute.hpp"
#include "support/graphs.hpp"
#include "udom/approx.hpp"
#include "udom/bounds.hpp"
#include "udom/branching.hpp"
#include "udom/coloring.hpp"
#include "udom/corpus.hpp"
#include "udom/io.hpp"
#include "udom/kernels.hpp"
#include "udom/oracle.hpp"
#include "udom/pathdp.hpp"
#include "udom/reductions.hpp"
#include "udom/validate.hpp"

using namespace udom;

namespace {

// Largest nodes / 4.3077^ell over the criterion 7 sample, measured once and locked.
constexpr double kLockedBranchConstant = 6.0;
constexpr double kCoudBase = 4.3077;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
  bool pass() const { return failures == 0; }
  std::string detail() const {
    std::ostringstream s;
    s << checks << " checks, " << failures << " failures";
    if (failures > 0) s << "; first: " << first;
    return s.str();
  }
};

struct Instance {
  std::string name;
  Graph g;
};

std::string graph_name(const std::string& prefix, int idx) { return prefix + "#" + std::to_string(idx); }

std::vector<Instance> exhaustive_corpus(int up_to) {
  std::vector<Instance> out;
  for (int n = 1; n <= up_to; ++n) {
    int idx = 0;
    for (auto& g : connected_graphs(n)) out.push_back({graph_name("conn" + std::to_string(n), idx++), std::move(g)});
  }
  return out;
}

// 500 graphs with 8 <= n <= 12: every third one subcubic, the rest G(n,p).
std::vector<Instance> random_corpus() {
  std::vector<Instance> out;
  for (int i = 0; i < 500; ++i) {
    const int n = 8 + i % 5;
    const std::uint64_t seed = kDefaultSeed + static_cast<std::uint64_t>(i);
    if (i % 3 == 0) {
      out.push_back({graph_name("subcubic", i), random_subcubic(n, seed)});
    } else {
      const double p = 0.15 + 0.05 * (i % 5);
      out.push_back({graph_name("gnp", i), random_gnp(n, p, seed)});
    }
  }
  return out;
}

struct Shared {
  std::vector<Instance> corpus;
  std::vector<int> gamma;
  Tally dp_structural;
  int value_only_runs = 0;
};

bool criterion1(Shared& s, std::string& detail) {
  Tally t;
  DpOptions opts;
  opts.max_bag = 10;
  for (std::size_t idx = 0; idx < s.corpus.size(); ++idx) {
    const auto& [name, g] = s.corpus[idx];
    const int n = g.n();
    const auto oracle = upper_domination_exact(g);
    const int gamma = s.gamma[idx];
    t.check(is_minimal_dominating(g, oracle.witness) && oracle.witness.size() == gamma, name + " oracle witness");

    std::vector<NicePathDecomposition> decomps;
    for (const auto& nd : {nicify(build_path_decomposition(g, DecompositionStrategy::min_degree)),
                           nicify(build_path_decomposition(g, DecompositionStrategy::bfs_order)),
                           nicify(build_path_decomposition(g, DecompositionStrategy::random_order, idx))}) {
      const bool seen = std::any_of(decomps.begin(), decomps.end(), [&](const auto& o) { return o.steps == nd.steps; });
      if (!seen && nd.width() + 1 <= opts.max_bag) decomps.push_back(nd);
    }
    for (std::uint64_t extra = 1; decomps.size() < 2 && extra <= 20; ++extra) {
      const auto nd = nicify(build_path_decomposition(g, DecompositionStrategy::random_order, idx + 7919 * extra));
      const bool seen = std::any_of(decomps.begin(), decomps.end(), [&](const auto& o) { return o.steps == nd.steps; });
      if (!seen && nd.width() + 1 <= opts.max_bag) decomps.push_back(nd);
    }
    t.check(decomps.size() >= 2 || n <= 1, name + " fewer than two usable decompositions");
    for (std::size_t i = 0; i < decomps.size(); ++i) {
      opts.witness = i == 0;
      DpResult dp;
      try {
        dp = dp_upper_domination(g, decomps[i], opts);
      } catch (const CapExceeded&) {
        opts.witness = false;
        ++s.value_only_runs;
        dp = dp_upper_domination(g, decomps[i], opts);
      }
      t.check(dp.report.value == gamma, name + " pathdp");
      if (opts.witness) t.check(is_minimal_dominating(g, dp.report.witness), name + " pathdp witness");
      s.dp_structural.check(dp.stats.promise_violations == 0, name + " promise violation");
      s.dp_structural.check(dp.stats.bound_violations == 0, name + " state bound");
    }

    for (int ell = 0; ell <= n; ++ell) {
      const auto r = compute_coud(g, ell);
      t.check(r.yes == (gamma >= n - ell), name + " compute_coud ell=" + std::to_string(ell));
      if (r.yes) t.check(is_minimal_dominating(g, r.report.witness), name + " compute_coud witness");
    }
    if (g.max_degree() <= 3) {
      for (int k = 0; k <= n; ++k) {
        const auto r = ud_bounded_degree(g, k);
        t.check(r.yes == (gamma >= k), name + " ud_bounded_degree k=" + std::to_string(k));
        if (r.yes && n > 0) t.check(is_minimal_dominating(g, r.report.witness), name + " ud_bounded_degree witness");
      }
    }
  }
  detail = std::to_string(s.corpus.size()) + " graphs, " + t.detail() + ", witness tables over the cap: " +
           std::to_string(s.value_only_runs);
  return t.pass();
}

bool criterion2(const Shared& s, std::string& detail) {
  Tally t;
  long considered = 0;
  for (std::size_t idx = 0; idx < s.corpus.size(); ++idx) {
    const auto& [name, g] = s.corpus[idx];
    if (g.n() > 10) continue;
    ++considered;
    const auto c = chain_values(g, Exec::parallel);
    t.check(c == chain_values(g, Exec::serial), name + " serial/parallel chain");
    t.check(c.chain_holds(), name + " chain order");
    t.check(c.Gamma == s.gamma[idx], name + " chain Gamma vs oracle");
  }
  detail = std::to_string(considered) + " graphs, " + t.detail();
  return t.pass();
}

bool criterion3(std::string& detail) {
  Tally t;
  long graphs = 0;
  long boundary = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : connected_graphs(n)) {
      ++graphs;
      const auto c = chain_values(g, Exec::parallel);
      const std::string name = serialize_graph(g);
      t.check(Rational(c.Gamma) <= gamma_upper_bound_exact(n, c.alpha), "alpha bound on " + name);
      if (g.max_degree() >= 1) {
        t.check(Rational(c.Gamma) <= gamma_upper_bound_degree(n, c.alpha, g.min_degree(), g.max_degree()), "degree bound on " + name);
      }
      if (g.is_regular() && g.max_degree() >= 1) t.check(2 * c.Gamma <= n, "regular bound on " + name);
      if (n >= 3 && !co_gamma_bounds(n, c.tau(n), c.Gamma)) {
        const bool reported = co_gamma_boundary_case(c.tau(n), c.alpha, c.Gamma);
        boundary += reported ? 1 : 0;
        t.check(reported, "co-Gamma bound on " + name);
      }
    }
  }
  detail = std::to_string(graphs) + " graphs, " + t.detail() + ", boundary cases reported: " + std::to_string(boundary);
  return t.pass();
}

bool criterion4(std::string& detail) {
  Tally t;
  std::vector<Graph> corpus;
  for (int n = 1; n <= 7; ++n) {
    for (auto& g : connected_graphs(n)) corpus.push_back(std::move(g));
  }
  for (int i = 0; i < 1500; ++i) {
    const int n = 8 + i % 3;
    corpus.push_back(random_gnp(n, 0.1 + 0.05 * (i % 6), kDefaultSeed + 7000 + static_cast<std::uint64_t>(i)));
  }
  long no_decisions = 0;
  for (const auto& g : corpus) {
    const std::string name = serialize_graph(g);
    const int gamma = upper_domination_exact(g).value;
    const int n = g.n();
    for (int ell = 0; ell <= 4; ++ell) {
      const bool truth = gamma >= n - ell;
      const auto r = coud_kernelize(g, ell);
      if (r.decided()) {
        t.check(r.answer == truth, "coud_kernelize decision on " + name);
      } else {
        const long long lp = r.parameter;
        t.check(r.graph.n() <= lp * (lp + 1) && r.graph.edge_count() <= lp * lp, "coud_kernelize size on " + name);
        t.check((upper_domination_exact(r.graph).value >= r.graph.n() - r.parameter) == truth, "coud_kernelize equivalence on " + name);
      }
      const auto d = coud_kernel_degree(g, ell);
      if (d.decided()) {
        if (!d.answer) {
          ++no_decisions;
          t.check(!truth, "coud_kernel_degree NO on " + name);
        }
        t.check(d.answer == truth, "coud_kernel_degree decision on " + name);
      } else {
        t.check((upper_domination_exact(d.graph).value >= d.graph.n() - d.parameter) == truth, "coud_kernel_degree equivalence on " + name);
      }
    }
    for (int k = 0; k <= std::min(n, 6); ++k) {
      const auto r = ud_kernel_brooks(g, k);
      if (r.decided()) {
        t.check(r.answer == (gamma >= k), "ud_kernel_brooks decision on " + name);
        if (r.answer && r.certificate) {
          t.check(is_minimal_dominating(g, *r.certificate) && r.certificate->size() >= k, "ud_kernel_brooks certificate on " + name);
        }
      } else {
        t.check(r.graph.n() <= r.graph.max_degree() * r.parameter, "ud_kernel_brooks size on " + name);
        t.check((upper_domination_exact(r.graph).value >= r.parameter) == (gamma >= k), "ud_kernel_brooks equivalence on " + name);
      }
    }
  }
  detail = std::to_string(corpus.size()) + " graphs, " + t.detail() + ", degree-kernel NO decisions: " + std::to_string(no_decisions);
  return t.pass();
}

VertexSet maximum_independent(const Graph& g) {
  std::uint64_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()); ++m) {
    if (brute::independent(g, m) && std::popcount(m) > std::popcount(best)) best = m;
  }
  return VertexSet::from_word(g.n(), best);
}

bool criterion5(std::string& detail) {
  Tally t;
  OracleCaps caps;
  caps.chain_n = 18;
  for (int n = 3; n <= 8; ++n) {
    const auto c = chain_values(gen_gn_family(n, GnVariant::plain), Exec::parallel, caps);
    t.check(c.Gamma == n && c.gamma == 2, "G" + std::to_string(n));
    const auto cc = chain_values(gen_gn_family(n, GnVariant::double_prime), Exec::parallel, caps);
    t.check(cc.Gamma == 2 && cc.gamma == 2, "G''" + std::to_string(n));
  }
  for (const Graph& src : {fixtures::complete(4), fixtures::complete_bipartite(3, 3)}) {
    const auto art = mis_to_ud_cubic(src);
    const VertexSet is = maximum_independent(src);
    const VertexSet d = art.forward(is);
    t.check(art.graph->is_regular() && art.graph->max_degree() == 3, "cubic output");
    t.check(d.size() == is.size() + 3 * src.edge_count() && is_minimal_dominating(*art.graph, d), "cubic forward witness");
  }
  int large = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 5 + i % 6;
    const int m = 3 + i % 6;
    const Hypergraph h = random_hypergraph(n, m, 2 + i % 3, kDefaultSeed + 300 + static_cast<std::uint64_t>(i));
    const auto art = mmhs_to_ud(h);
    const int opt = mmhs_exact(h).value;
    const int gamma = upper_domination_exact(*art.graph).value;
    if (opt >= 3) {
      ++large;
      t.check(gamma == opt, "mmhs_to_ud on " + serialize_hypergraph(h));
    }
  }
  std::mt19937_64 rng(kDefaultSeed);
  OracleCaps big;
  big.enumerate_n = 48;
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 3;
    const int n = k + static_cast<int>(rng() % static_cast<std::uint64_t>(10 - k));
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = v < k ? v : static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    const Graph g = random_gnp(n, 0.2 + 0.1 * (trial % 4), rng());
    const auto art = multicoloured_clique_to_ud(g, colour, k);
    if (art.graph->n() > big.enumerate_n) continue;
    t.check((upper_domination_exact(*art.graph, big).value >= art.threshold) == has_multicoloured_clique(g, colour, k),
            "multicoloured clique on " + serialize_graph(g));
  }
  detail = t.detail() + ", mmhs samples with opt >= 3: " + std::to_string(large);
  return t.pass();
}

bool criterion6(const Shared& s, std::string& detail) {
  Tally t;
  for (std::size_t idx = 0; idx < s.corpus.size(); ++idx) {
    const auto& [name, g] = s.corpus[idx];
    const int n = g.n();
    const int gamma = s.gamma[idx];
    const auto a = coud_4approx(g);
    const int tau = n - chain_values(g).alpha;
    t.check(is_maximal_independent(g, a.witness.complement()), name + " coud4 witness");
    t.check(a.value <= 4 * (n - gamma) && a.value <= 2 * tau, name + " coud4 ratio");
    const auto u = ud_coloring_approx(g);
    t.check(is_minimal_dominating(g, u.witness), name + " udcolor witness");
    t.check(u.value * u.colours >= n, name + " udcolor n/p");
    if (g.is_regular() && g.max_degree() >= 2) t.check(2 * gamma <= g.max_degree() * u.value, name + " udcolor Delta/2");
  }
  for (int i = 0; i < 1000; ++i) {
    const int d = 1 + i % 4;
    const Hypergraph h = random_hypergraph(6 + i % 30, 4 + i % 25, d, kDefaultSeed + 900 + static_cast<std::uint64_t>(i));
    const auto r = mmhs_approx(h);
    t.check(is_minimal_hitting_set(h, r.witness), "mmhs_approx on " + serialize_hypergraph(h));
  }
  std::vector<double> xs;
  std::vector<double> ys;
  std::ostringstream medians;
  for (int n : {64, 128, 256}) {
    std::vector<int> sizes;
    for (int i = 0; i < 15; ++i) {
      const Hypergraph h = random_hypergraph(n, 2 * n, 2, kDefaultSeed + static_cast<std::uint64_t>(n * 100 + i));
      const auto r = mmhs_approx(h);
      t.check(is_minimal_hitting_set(h, r.witness), "mmhs_approx growth sample");
      sizes.push_back(r.value);
    }
    std::nth_element(sizes.begin(), sizes.begin() + 7, sizes.end());
    xs.push_back(std::log(n));
    ys.push_back(std::log(sizes[7]));
    medians << ' ' << n << ':' << sizes[7];
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / 3;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / 3;
  double sxy = 0;
  double sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  t.check(slope >= 0.4, "mmhs growth exponent");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", slope);
  detail = t.detail() + ", mmhs medians" + medians.str() + ", fitted exponent " + buf;
  return t.pass();
}

bool criterion7(std::string& detail) {
  Tally t;
  double worst = 0;
  std::uint64_t violations = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 10 + i % 9;
    const Graph g = random_subcubic(n, kDefaultSeed + 500 + static_cast<std::uint64_t>(i));
    const int gamma = upper_domination_exact(g).value;
    for (int ell = 0; ell <= n; ++ell) {
      const auto r = compute_coud(g, ell);
      violations += r.stats.budget_violations;
      t.check(r.yes == (gamma >= n - ell), "decision on subcubic #" + std::to_string(i));
      worst = std::max(worst, static_cast<double>(r.report.nodes_explored) / std::pow(kCoudBase, ell));
    }
  }
  t.check(violations == 0, "budget monotonicity");
  t.check(kLockedBranchConstant > 0 && worst <= 1.1 * kLockedBranchConstant && worst >= 0.9 * kLockedBranchConstant,
          "node count constant drifted from the locked baseline");
  char buf[128];
  std::snprintf(buf, sizeof buf, ", C measured %.9g locked %.9g, budget violations %llu", worst, kLockedBranchConstant,
                static_cast<unsigned long long>(violations));
  detail = t.detail() + buf;
  return t.pass();
}

bool criterion8(std::string& detail) {
  Tally t;
  std::vector<Graph> corpus;
  for (int n = 1; n <= 7; ++n) {
    for (auto& g : connected_graphs(n)) corpus.push_back(std::move(g));
  }
  for (int i = 0; i < 500; ++i) corpus.push_back(random_gnp(8 + i % 3, 0.1 + 0.1 * (i % 5), kDefaultSeed + 4000 + static_cast<std::uint64_t>(i)));
  for (const auto& g : corpus) t.check(mdse_decide(g, g.empty_set()).exists, "empty set on " + serialize_graph(g));
  const Graph p3 = fixtures::path(3);
  t.check(mdse_decide(p3, VertexSet(3, {0, 2})).exists, "P3 {0,2}");
  t.check(!mdse_decide(p3, VertexSet(3, {0, 1})).exists, "P3 {0,1}");
  std::mt19937_64 rng(kDefaultSeed + 8);
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + i % 7;
    const Graph g = random_gnp(n, 0.15 + 0.05 * (i % 6), rng());
    std::uint64_t mask = 0;
    const int want = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < want; ++j) mask |= std::uint64_t{1} << (rng() % static_cast<std::uint64_t>(n));
    const auto r = mdse_decide(g, VertexSet::from_word(n, mask));
    t.check(r.exists == brute::mdse(g, mask), "random MDSE on " + serialize_graph(g));
    if (r.exists && r.witness) {
      t.check(is_minimal_dominating(g, *r.witness) && VertexSet::from_word(n, mask).is_subset_of(*r.witness), "MDSE witness");
    }
  }
  detail = std::to_string(corpus.size()) + " graphs for S = {}, " + t.detail();
  return t.pass();
}

}  // namespace

int main() {
  Shared shared;
  shared.corpus = exhaustive_corpus(7);
  for (auto& inst : random_corpus()) shared.corpus.push_back(std::move(inst));
  for (const auto& inst : shared.corpus) shared.gamma.push_back(upper_domination_exact(inst.g).value);

  int failed = 0;
  const auto report = [&](int id, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
    failed += ok ? 0 : 1;
  };
  report(1, [&](std::string& d) { return criterion1(shared, d); });
  report(2, [&](std::string& d) { return criterion2(shared, d); });
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, [&](std::string& d) { return criterion6(shared, d); });
  report(7, criterion7);
  report(8, criterion8);
  report(9, [&](std::string& d) {
    d = "DP runs of criterion 1: " + shared.dp_structural.detail();
    return shared.dp_structural.checks > 0 && shared.dp_structural.pass();
  });
  return failed == 0 ? 0 : 1;
}
