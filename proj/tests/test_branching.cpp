#include <gtest/gtest.h>

#include "support/graphs.hpp"
#include "udom/branching.hpp"
#include "udom/corpus.hpp"
#include "udom/io.hpp"
#include "udom/oracle.hpp"
#include "udom/reductions.hpp"
#include "udom/validate.hpp"

using namespace udom;

TEST(ComputeCoud, SpecExamples) {
  EXPECT_TRUE(compute_coud(fixtures::path(4), 2).yes);
  EXPECT_FALSE(compute_coud(fixtures::path(4), 1).yes);
  EXPECT_TRUE(compute_coud(fixtures::complete(3), 2).yes);
  EXPECT_FALSE(compute_coud(fixtures::complete(3), 1).yes);
  EXPECT_TRUE(compute_coud(Graph(3), 0).yes);
  EXPECT_FALSE(compute_coud(fixtures::path(2), -1).yes);
}

TEST(ComputeCoud, WitnessAndStatistics) {
  const Graph g = fixtures::cycle(7);
  const auto r = compute_coud(g, 4);
  ASSERT_TRUE(r.yes);
  EXPECT_TRUE(is_minimal_dominating(g, r.report.witness));
  EXPECT_GE(r.report.witness.size(), 3);
  EXPECT_EQ(r.report.nodes_explored, r.stats.total());
  EXPECT_EQ(r.stats.budget_violations, 0U);
  EXPECT_GT(r.stats.max_depth, 0);
  EXPECT_NE(r.stats.to_string().find("B3="), std::string::npos);
}

TEST(ComputeCoud, AgreesWithOracle) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 6; ++n) {
    for (auto& g : connected_graphs(n)) corpus.push_back(std::move(g));
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) corpus.push_back(random_gnp(9, 0.3, seed));
  for (const auto& g : corpus) {
    const int gamma = upper_domination_exact(g).value;
    for (int ell = 0; ell <= g.n(); ++ell) {
      const auto r = compute_coud(g, ell);
      ASSERT_EQ(r.yes, gamma >= g.n() - ell) << serialize_graph(g) << "ell " << ell;
      ASSERT_EQ(r.stats.budget_violations, 0U);
      if (r.yes) ASSERT_TRUE(is_minimal_dominating(g, r.report.witness));
    }
  }
}

TEST(UdBoundedDegree, SpecExamples) {
  const Graph g3 = gen_gn_family(3, GnVariant::plain);
  const auto a = ud_bounded_degree(g3, 3);
  ASSERT_TRUE(a.yes);
  EXPECT_TRUE(is_minimal_dominating(g3, a.report.witness));
  EXPECT_FALSE(ud_bounded_degree(fixtures::complete(4), 2).yes);
  EXPECT_TRUE(ud_bounded_degree(fixtures::cycle(6), 3).yes);
  EXPECT_FALSE(ud_bounded_degree(fixtures::cycle(6), 4).yes);
  EXPECT_TRUE(ud_bounded_degree(Graph(0), 0).yes);
}

TEST(UdBoundedDegree, AgreesWithOracleOnSubcubic) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 7; ++n) {
    for (auto& g : connected_graphs(n)) {
      if (g.max_degree() <= 3) corpus.push_back(std::move(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) corpus.push_back(random_subcubic(10, seed));
  for (const auto& g : corpus) {
    const int gamma = upper_domination_exact(g).value;
    for (int k = 0; k <= g.n(); ++k) {
      const auto r = ud_bounded_degree(g, k);
      ASSERT_EQ(r.yes, gamma >= k) << serialize_graph(g) << "k " << k;
      if (r.yes && g.n() > 0) {
        ASSERT_TRUE(is_minimal_dominating(g, r.report.witness));
        ASSERT_GE(r.report.witness.size(), k);
      }
    }
  }
}
