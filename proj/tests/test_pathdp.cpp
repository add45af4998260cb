#include <gtest/gtest.h>

#include "support/graphs.hpp"
#include "udom/corpus.hpp"
#include "udom/io.hpp"
#include "udom/oracle.hpp"
#include "udom/pathdp.hpp"
#include "udom/reductions.hpp"
#include "udom/validate.hpp"

using namespace udom;

namespace {

using Kind = NiceStep::Kind;

NicePathDecomposition nice(const Graph& g, DecompositionStrategy s = DecompositionStrategy::min_degree, std::uint64_t seed = 0) {
  return nicify(build_path_decomposition(g, s, seed));
}

}  // namespace

TEST(PathDecomposition, StrategyWidths) {
  EXPECT_EQ(build_path_decomposition(fixtures::path(4), DecompositionStrategy::bfs_order).width(), 1);
  EXPECT_EQ(build_path_decomposition(fixtures::cycle(4), DecompositionStrategy::bfs_order).width(), 2);
  EXPECT_EQ(build_path_decomposition(fixtures::complete(4), DecompositionStrategy::min_degree).width(), 3);
  EXPECT_EQ(parse_strategy("random-order"), DecompositionStrategy::random_order);
  EXPECT_THROW(parse_strategy("file"), std::invalid_argument);
}

TEST(PathDecomposition, StrategiesAreValid) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (auto s : {DecompositionStrategy::bfs_order, DecompositionStrategy::min_degree, DecompositionStrategy::random_order}) {
        const auto pd = build_path_decomposition(g, s, 5);
        ASSERT_EQ(decomposition_violation(g, pd), "");
        const auto nd = nicify(pd);
        ASSERT_EQ(decomposition_violation(g, nd), "");
        ASSERT_EQ(nd.width(), pd.width());
      }
    }
  }
  PathDecomposition missing{3, {VertexSet(3, {0, 1})}};
  EXPECT_NE(decomposition_violation(fixtures::path(3), missing), "");
  PathDecomposition gap{2, {VertexSet(2, {0}), VertexSet(2, {1}), VertexSet(2, {0, 1})}};
  EXPECT_THROW(nicify(gap), std::invalid_argument);
}

TEST(PathDecomposition, NicifyExamples) {
  const auto a = nicify(PathDecomposition{2, {VertexSet(2, {0}), VertexSet(2, {0, 1})}});
  const std::vector<NiceStep> expected{{Kind::introduce, 0}, {Kind::introduce, 1}, {Kind::forget, 0}, {Kind::forget, 1}};
  EXPECT_EQ(a.steps, expected);

  const auto b = nicify(PathDecomposition{3, {VertexSet(3, {0, 1, 2})}});
  ASSERT_EQ(b.steps.size(), 6U);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(b.steps[static_cast<std::size_t>(i)].kind, Kind::introduce);
    EXPECT_EQ(b.steps[static_cast<std::size_t>(i + 3)].kind, Kind::forget);
  }
  EXPECT_TRUE(nicify(PathDecomposition{0, {}}).steps.empty());
}

TEST(PathDecomposition, TextRoundTrip) {
  const Graph g = fixtures::cycle(5);
  const auto pd = build_path_decomposition(g, DecompositionStrategy::bfs_order);
  const auto text = serialize_path_decomposition(pd);
  EXPECT_EQ(text.rfind("s pd ", 0), 0U);
  const auto back = parse_path_decomposition(text);
  ASSERT_EQ(back.bags.size(), pd.bags.size());
  for (std::size_t i = 0; i < pd.bags.size(); ++i) EXPECT_TRUE(back.bags[i] == pd.bags[i]);
  const auto nd = nicify(pd);
  EXPECT_EQ(parse_nice_steps(serialize_nice_steps(nd), 5).steps, nd.steps);
  EXPECT_THROW(parse_path_decomposition("s pd 1 2 3\nb 1 0 9\n"), FormatError);
}

TEST(PathDp, SpecExamples) {
  const Graph p4 = fixtures::path(4);
  const auto a = dp_upper_domination(p4, nice(p4, DecompositionStrategy::bfs_order));
  EXPECT_EQ(a.report.value, 2);
  EXPECT_TRUE(is_minimal_dominating(p4, a.report.witness));

  const Graph g3 = gen_gn_family(3, GnVariant::plain);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(dp_upper_domination(g3, nice(g3, DecompositionStrategy::random_order, seed)).report.value, 3);
  }
  const auto k1 = dp_upper_domination(Graph(1), nice(Graph(1)));
  EXPECT_EQ(k1.report.value, 1);
  EXPECT_EQ(k1.report.witness.to_string(), "{0}");
  EXPECT_EQ(dp_upper_domination(Graph(0), NicePathDecomposition{0, {}}).report.value, 0);
}

TEST(PathDp, RejectsBadInput) {
  const Graph p3 = fixtures::path(3);
  NicePathDecomposition partial{3, {{Kind::introduce, 0}, {Kind::introduce, 1}, {Kind::forget, 0}, {Kind::forget, 1}}};
  EXPECT_THROW(dp_upper_domination(p3, partial), std::invalid_argument);
  DpOptions opts;
  opts.max_bag = 3;
  EXPECT_THROW(dp_upper_domination(fixtures::complete(4), nice(fixtures::complete(4)), opts), CapExceeded);
}

TEST(PathDp, AgreesWithOracleAcrossDecompositions) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 6; ++n) {
    for (auto& g : connected_graphs(n)) corpus.push_back(std::move(g));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) corpus.push_back(random_gnp(9, 0.25, seed));
  for (const auto& g : corpus) {
    const int gamma = upper_domination_exact(g).value;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = dp_upper_domination(g, nice(g, DecompositionStrategy::random_order, seed));
      ASSERT_EQ(r.report.value, gamma) << serialize_graph(g);
      ASSERT_TRUE(is_minimal_dominating(g, r.report.witness));
      ASSERT_EQ(r.report.witness.size(), gamma);
      ASSERT_EQ(r.stats.bound_violations, 0);
      ASSERT_EQ(r.stats.promise_violations, 0);
    }
  }
}

TEST(PathDp, SerialAndParallelAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnp(10, 0.3, seed);
    const auto nd = nice(g, DecompositionStrategy::min_degree);
    DpOptions serial;
    serial.exec = Exec::serial;
    const auto s = dp_upper_domination(g, nd, serial);
    const auto p = dp_upper_domination(g, nd);
    ASSERT_EQ(s.report.value, p.report.value);
    ASSERT_TRUE(s.report.witness == p.report.witness);
    ASSERT_EQ(s.stats.feasible_states, p.stats.feasible_states);
  }
}

TEST(PathDp, ReversalAndValueOnlyMode) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_subcubic(12, seed);
    const auto nd = nice(g);
    const auto fwd = dp_upper_domination(g, nd);
    const auto bwd = dp_upper_domination(g, reverse(nd));
    ASSERT_EQ(fwd.report.value, bwd.report.value);
    DpOptions opts;
    opts.witness = false;
    ASSERT_EQ(dp_upper_domination(g, nd, opts).report.value, fwd.report.value);
  }
}
