#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "udom/approx.hpp"
#include "udom/bounds.hpp"
#include "udom/branching.hpp"
#include "udom/cli.hpp"
#include "udom/io.hpp"
#include "udom/kernels.hpp"
#include "udom/pathdp.hpp"
#include "udom/reductions.hpp"
#include "udom/validate.hpp"

namespace udom::cli {

namespace {

using nlohmann::json;

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_text_file(cfg.output, text);
  }
}

void write_sidecar(const RunConfig& cfg, const json& meta) {
  if (!cfg.output.empty()) write_text_file(cfg.output + ".json", meta.dump(2) + "\n");
}

void maybe_write_witness(const RunConfig& cfg, const VertexSet& w) {
  if (!cfg.witness.empty()) write_text_file(cfg.witness, serialize_vertex_set(w));
}

int answer(const RunConfig& cfg, std::ostream& out, bool yes) {
  out << "answer " << (yes ? "yes" : "no") << '\n';
  return !yes && cfg.fail_on_no ? kNo : kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const int n = g.n();
  if (cfg.algo == "chain") {
    const auto c = chain_values(g, cfg.serial ? Exec::serial : Exec::parallel, cfg.caps);
    out << "ir " << c.ir << "\ngamma " << c.gamma << "\ni " << c.i << "\nalpha " << c.alpha << "\nGamma " << c.Gamma
        << "\nIR " << c.IR << '\n';
    return kOk;
  }
  if (cfg.algo == "mdse") {
    if (cfg.set.empty()) throw std::invalid_argument("--algo mdse needs --set");
    const auto r = mdse_decide(g, parse_vertex_set(read_text_file(cfg.set), n, cfg.one_based), cfg.caps);
    if (r.witness) {
      out << "witness " << r.witness->to_string() << '\n';
      maybe_write_witness(cfg, *r.witness);
    }
    return answer(cfg, out, r.exists);
  }
  if (!is_exact_algo(cfg.algo)) throw std::invalid_argument("unknown algorithm '" + cfg.algo + "'");

  if (cfg.k || cfg.ell) {
    const int k = cfg.k ? *cfg.k : n - *cfg.ell;
    bool yes = false;
    VertexSet witness = g.empty_set();
    std::uint64_t nodes = 0;
    if (cfg.algo == "coud-branch") {
      const auto r = compute_coud(g, n - k);
      yes = r.yes;
      witness = r.report.witness;
      nodes = r.report.nodes_explored;
      out << "stats " << r.stats.to_string() << '\n';
    } else if (cfg.algo == "ud-branch") {
      const auto r = ud_bounded_degree(g, k);
      yes = r.yes;
      witness = r.report.witness;
      nodes = r.report.nodes_explored;
    } else {
      const GammaRun r = solve_gamma(g, cfg.algo, cfg);
      yes = r.value >= k;
      witness = r.witness;
      nodes = r.nodes;
    }
    if (yes) {
      out << "witness " << witness.to_string() << '\n';
      maybe_write_witness(cfg, witness);
    }
    out << "nodes " << nodes << '\n';
    return answer(cfg, out, yes);
  }

  const GammaRun r = solve_gamma(g, cfg.algo, cfg);
  out << "Gamma " << r.value << '\n';
  if (cfg.algo == "coud-branch") out << "co-Gamma " << n - r.value << '\n';
  out << "witness " << r.witness.to_string() << '\n';
  out << "nodes " << r.nodes << '\n';
  out << "time_ms " << r.time_ms << '\n';
  maybe_write_witness(cfg, r.witness);
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  std::uint64_t shown = 0;
  const auto total = enumerate_minimal_dominating_sets(
      g,
      [&](const VertexSet& s) {
        if (cfg.count < 0 || shown < static_cast<std::uint64_t>(cfg.count)) {
          out << "set " << s.to_string() << '\n';
          ++shown;
        }
      },
      cfg.caps);
  out << "count " << total << '\n';
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const int n = g.n();
  const auto c = chain_values(g, cfg.serial ? Exec::serial : Exec::parallel, cfg.caps);
  const int tau = c.tau(n);
  out << "n " << n << "\nalpha " << c.alpha << "\ntau " << tau << "\nGamma " << c.Gamma << '\n';
  out << "chain " << (c.chain_holds() ? "holds" : "violated") << '\n';
  bool ok = c.chain_holds();
  if (n > 0 && is_connected(g)) {
    const Rational eq1 = gamma_upper_bound_exact(n, c.alpha);
    const bool h1 = Rational(c.Gamma) <= eq1;
    out << "bound-alpha " << eq1.to_string() << ' ' << (h1 ? "holds" : "violated") << '\n';
    ok = ok && h1;
    if (g.max_degree() >= 1) {
      const Rational eq2 = gamma_upper_bound_degree(n, c.alpha, g.min_degree(), g.max_degree());
      const bool h2 = Rational(c.Gamma) <= eq2;
      out << "bound-degree " << eq2.to_string() << ' ' << (h2 ? "holds" : "violated") << '\n';
      ok = ok && h2;
    }
  }
  if (g.is_regular() && g.max_degree() >= 1) {
    const bool hr = 2 * c.Gamma <= n;
    out << "bound-regular " << Rational(n, 2).to_string() << ' ' << (hr ? "holds" : "violated") << '\n';
    ok = ok && hr;
  }
  if (n >= 3) {
    if (co_gamma_bounds(n, tau, c.Gamma)) {
      out << "co-gamma holds\n";
    } else if (co_gamma_boundary_case(tau, c.alpha, c.Gamma)) {
      out << "co-gamma boundary\n";
    } else {
      out << "co-gamma violated\n";
      ok = false;
    }
  }
  return ok ? kOk : kNo;
}

int cmd_kernelize(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const int param = cfg.k ? *cfg.k : (cfg.ell ? *cfg.ell : -1);
  if (param < 0) throw std::invalid_argument("kernelize needs --param");
  KernelResult r;
  if (cfg.algo == "coud") {
    r = coud_kernelize(g, param);
  } else if (cfg.algo == "brooks") {
    r = ud_kernel_brooks(g, param);
  } else if (cfg.algo == "degree") {
    r = coud_kernel_degree(g, param);
  } else {
    throw std::invalid_argument("unknown kernel '" + cfg.algo + "'");
  }
  for (const auto& s : r.trace) out << "trace " << s.rule << ' ' << s.vertex << ' ' << s.parameter << '\n';
  if (r.decided()) {
    out << "outcome decided\n";
    if (r.certificate) out << "certificate " << r.certificate->to_string() << '\n';
    return answer(cfg, out, r.answer);
  }
  out << "outcome reduced\nparameter " << r.parameter << "\nvertices " << r.graph.n() << "\nedges " << r.graph.edge_count()
      << '\n';
  if (!cfg.output.empty()) write_text_file(cfg.output, serialize_graph(r.graph));
  return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& out, const std::string& rho_text) {
  ApproxReport r;
  if (cfg.algo == "mmhs") {
    if (cfg.input.empty()) throw std::invalid_argument("--in is required");
    const Hypergraph h = read_hypergraph_file(cfg.input, cfg.one_based);
    r = mmhs_approx(h);
    if (!is_minimal_hitting_set(h, r.witness) && h.edge_count() > 0) throw std::logic_error("mmhs witness failed validation");
  } else {
    const Graph g = load_graph(cfg);
    if (cfg.algo == "coud4") {
      r = coud_4approx(g);
    } else if (cfg.algo == "udcolor") {
      r = ud_coloring_approx(g);
    } else {
      throw std::invalid_argument("unknown approximation '" + cfg.algo + "'");
    }
  }
  out << "value " << r.value << "\nguarantee " << r.guarantee << "\ncomponent " << r.component << '\n';
  if (cfg.algo == "udcolor") {
    const auto slash = rho_text.find('/');
    const Rational rho = slash == std::string::npos
                             ? Rational(std::stoll(rho_text))
                             : Rational(std::stoll(rho_text.substr(0, slash)), std::stoll(rho_text.substr(slash + 1)));
    out << "colours " << r.colours << "\ndelta " << r.delta << "\nratio " << r.ratio_at(rho).to_string() << " (rho "
        << rho.to_string() << ")\n";
  }
  out << "witness " << r.witness.to_string() << '\n';
  maybe_write_witness(cfg, r.witness);
  return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  json meta{{"family", cfg.family}, {"n", cfg.n}, {"seed", cfg.seed}};
  if (cfg.family == "hypergraph") {
    meta["m"] = cfg.m;
    meta["d"] = cfg.d;
    emit(cfg, out, serialize_hypergraph(random_hypergraph(cfg.n, cfg.m, cfg.d, cfg.seed)));
    write_sidecar(cfg, meta);
    return kOk;
  }
  Graph g;
  if (cfg.family == "gn") {
    g = gen_gn_family(cfg.n, GnVariant::plain);
  } else if (cfg.family == "gn-prime") {
    g = gen_gn_family(cfg.n, GnVariant::prime);
  } else if (cfg.family == "gn-double-prime") {
    g = gen_gn_family(cfg.n, GnVariant::double_prime);
  } else if (cfg.family == "gnp") {
    g = random_gnp(cfg.n, cfg.p, cfg.seed);
    meta["p"] = cfg.p;
  } else if (cfg.family == "connected-gnp") {
    g = random_connected_gnp(cfg.n, cfg.p, cfg.seed);
    meta["p"] = cfg.p;
  } else if (cfg.family == "subcubic") {
    g = random_subcubic(cfg.n, cfg.seed, true);
  } else if (cfg.family == "cubic") {
    g = random_cubic(cfg.n, cfg.seed);
  } else {
    throw std::invalid_argument("unknown family '" + cfg.family + "'");
  }
  meta["vertices"] = g.n();
  meta["edges"] = g.edge_count();
  emit(cfg, out, serialize_graph(g));
  write_sidecar(cfg, meta);
  return kOk;
}

std::vector<int> read_colours(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<int> colour;
  for (int c; in >> c;) colour.push_back(c);
  if (!in.eof()) throw FormatError(path + ": expected whitespace-separated colour classes");
  return colour;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  json meta{{"family", cfg.family}, {"source", cfg.input}};
  std::optional<ReductionArtifact> art;
  if (cfg.family == "pad-cubic") {
    const Graph g = load_graph(cfg);
    const VertexSet s = cfg.set.empty() ? g.empty_set() : parse_vertex_set(read_text_file(cfg.set), g.n(), cfg.one_based);
    const auto [padded, black] = pad_to_cubic(g, s);
    std::vector<int> ids;
    black.for_each([&](Vertex v) { ids.push_back(v); });
    meta["set"] = ids;
    emit(cfg, out, serialize_graph(padded));
    write_sidecar(cfg, meta);
    return kOk;
  }
  if (cfg.family == "mmhs-ud") {
    if (cfg.input.empty()) throw std::invalid_argument("--in is required");
    art = mmhs_to_ud(read_hypergraph_file(cfg.input, cfg.one_based));
  } else {
    const Graph g = load_graph(cfg);
    if (cfg.family == "mis-cubic") {
      art = mis_to_ud_cubic(g);
    } else if (cfg.family == "mcc") {
      if (cfg.colours.empty() || !cfg.k) throw std::invalid_argument("mcc needs --colours and --param");
      art = multicoloured_clique_to_ud(g, read_colours(cfg.colours), *cfg.k);
    } else if (cfg.family == "mis-mmhs") {
      art = mis_to_mmhs(g, cfg.d);
    } else {
      throw std::invalid_argument("unknown reduction '" + cfg.family + "'");
    }
  }
  meta["relation"] = {{"a", art->relation.a}, {"b", art->relation.b}, {"condition", art->relation.condition}};
  meta["threshold"] = art->threshold;
  meta["trivial_no"] = art->trivial_no;
  json layout = json::object();
  for (const auto& [key, value] : art->layout) layout[key] = value;
  meta["layout"] = layout;
  emit(cfg, out, art->graph ? serialize_graph(*art->graph) : serialize_hypergraph(*art->hypergraph));
  write_sidecar(cfg, meta);
  return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.witness.empty()) throw std::invalid_argument("--witness is required");
  bool valid = false;
  if (cfg.problem == "mhs") {
    if (cfg.input.empty()) throw std::invalid_argument("--in is required");
    const Hypergraph h = read_hypergraph_file(cfg.input, cfg.one_based);
    valid = is_minimal_hitting_set(h, parse_vertex_set(read_text_file(cfg.witness), h.n(), cfg.one_based));
  } else {
    const Graph g = load_graph(cfg);
    const VertexSet s = parse_vertex_set(read_text_file(cfg.witness), g.n(), cfg.one_based);
    if (cfg.problem == "ud") {
      valid = is_minimal_dominating(g, s);
    } else if (cfg.problem == "dominating") {
      valid = is_dominating(g, s);
    } else if (cfg.problem == "is") {
      valid = is_independent(g, s);
    } else if (cfg.problem == "mis") {
      valid = is_maximal_independent(g, s);
    } else if (cfg.problem == "cover") {
      valid = is_vertex_cover(g, s);
    } else {
      throw std::invalid_argument("unknown problem '" + cfg.problem + "'");
    }
    if (valid && cfg.k && s.size() < *cfg.k) valid = false;
    out << "size " << s.size() << '\n';
  }
  out << (valid ? "valid" : "invalid") << '\n';
  return valid ? kOk : kNo;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const BenchOutcome r = run_bench(cfg, out);
  for (std::size_t a = 0; a < r.mismatches.size(); ++a) {
    for (int x : r.mismatches[a]) {
      if (x != 0) return kNo;
    }
  }
  return r.failed_checks == 0 ? kOk : kNo;
}

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--in", cfg.input, "Input instance file");
  sub->add_flag("--edge-list", cfg.edge_list, "Input uses the '<n> <m>' edge-list format");
  sub->add_flag("--one-based", cfg.one_based, "Vertex labels in files start at 1");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    apply_env_caps(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  CLI::App app{"Upper domination toolkit"};
  app.require_subcommand(1);
  int k = -1;
  int ell = -1;
  std::string rho = "1";

  auto* solve = app.add_subcommand("solve", "Compute Gamma or decide Gamma >= k");
  add_input(solve, cfg);
  solve->add_option("--algo", cfg.algo, "oracle | pathdp | coud-branch | ud-branch | chain | mdse")->required();
  auto* dk = solve->add_option("--decide", k, "Decide Gamma >= k");
  solve->add_option("--decide-ell", ell, "Decide Gamma >= n - ell")->excludes(dk);
  solve->add_option("--strategy", cfg.strategy, "Decomposition builder: bfs-order | min-degree | random-order");
  solve->add_option("--decomposition", cfg.decomposition, "Path decomposition file");
  solve->add_option("--max-bag", cfg.max_bag, "Largest bag accepted by pathdp");
  solve->add_option("--set", cfg.set, "Vertex set file for mdse");
  solve->add_option("--witness-out", cfg.witness, "Write the witness set here");
  solve->add_option("--seed", cfg.seed);
  solve->add_flag("--serial", cfg.serial, "Use the serial reference kernels");
  solve->add_flag("--fail-on-no", cfg.fail_on_no, "Exit 1 on a negative decision");

  auto* enumerate = app.add_subcommand("enumerate", "List minimal dominating sets");
  add_input(enumerate, cfg);
  cfg.count = -1;
  enumerate->add_option("--limit", cfg.count, "Print at most this many sets");

  auto* bounds = app.add_subcommand("bounds", "Check the domination chain and the Gamma bounds");
  add_input(bounds, cfg);
  bounds->add_flag("--serial", cfg.serial);

  auto* kernelize = app.add_subcommand("kernelize", "Run a kernelization");
  add_input(kernelize, cfg);
  kernelize->add_option("--kernel", cfg.algo, "coud | brooks | degree")->required();
  kernelize->add_option("--param", k, "ell for coud/degree, k for brooks")->required();
  kernelize->add_option("--out", cfg.output, "Write the kernel graph here");
  kernelize->add_flag("--fail-on-no", cfg.fail_on_no);

  auto* approx = app.add_subcommand("approx", "Polynomial-time approximations");
  add_input(approx, cfg);
  approx->add_option("--algo", cfg.algo, "coud4 | udcolor | mmhs")->required();
  approx->add_option("--rho", rho, "Ratio of the independent set routine, as a or a/b");
  approx->add_option("--witness-out", cfg.witness);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", cfg.family, "gn | gn-prime | gn-double-prime | gnp | connected-gnp | subcubic | cubic | hypergraph")
      ->required();
  gen->add_option("--n", cfg.n)->required();
  gen->add_option("--p", cfg.p);
  gen->add_option("--m", cfg.m);
  gen->add_option("--d", cfg.d);
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--out", cfg.output, "Output file; a .json sidecar is written next to it");

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  add_input(reduce, cfg);
  reduce->add_option("--family", cfg.family, "mis-cubic | mmhs-ud | mcc | mis-mmhs | pad-cubic")->required();
  reduce->add_option("--colours", cfg.colours, "Colour class per vertex (mcc)");
  reduce->add_option("--param", k, "k for mcc");
  reduce->add_option("--d", cfg.d, "Edge size for mis-mmhs");
  reduce->add_option("--set", cfg.set, "Vertex set carried through pad-cubic");
  reduce->add_option("--out", cfg.output, "Output file; a .json sidecar is written next to it");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", cfg.suite, "small | exhaustive-n7 | random-subcubic | gn-family | reduction-samples")->required();
  bench->add_option("--algos", cfg.algos, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--report", cfg.report, "Append records to this file");
  bench->add_option("--count", cfg.count, "Instances for the random suites");
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--strategy", cfg.strategy);
  bench->add_option("--max-bag", cfg.max_bag);
  bench->add_flag("--serial", cfg.serial);

  auto* validate = app.add_subcommand("validate", "Check a witness");
  add_input(validate, cfg);
  validate->add_option("--witness", cfg.witness, "Vertex set file")->required();
  validate->add_option("--problem", cfg.problem, "ud | dominating | is | mis | cover | mhs");
  validate->add_option("--min-size", k, "Also require at least this many vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (k >= 0) cfg.k = k;
  if (ell >= 0) cfg.ell = ell;

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (bounds->parsed()) return cmd_bounds(cfg, out);
    if (kernelize->parsed()) return cmd_kernelize(cfg, out);
    if (approx->parsed()) return cmd_approx(cfg, out, rho);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
    if (validate->parsed()) return cmd_validate(cfg, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace udom::cli
