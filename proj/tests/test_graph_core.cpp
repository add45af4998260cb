#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/graphs.hpp"
#include "udom/coloring.hpp"
#include "udom/corpus.hpp"
#include "udom/fipo.hpp"
#include "udom/graph.hpp"
#include "udom/hypergraph.hpp"
#include "udom/io.hpp"
#include "udom/validate.hpp"

using namespace udom;

using fixtures::complete;
using fixtures::cycle;
using fixtures::path;

TEST(VertexSet, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(0), 64);
  EXPECT_EQ(s.last(), 129);
  EXPECT_EQ(s.to_string(), "{0,64,129}");
  VertexSet c = s.complement();
  EXPECT_EQ(c.size(), 127);
  EXPECT_FALSE(c.intersects(s));
  EXPECT_TRUE((c | s) == VertexSet::full(130));
  EXPECT_TRUE(lex_less(VertexSet(5, {0, 3}), VertexSet(5, {0, 4})));
  EXPECT_TRUE(lex_less(VertexSet(5, {0}), VertexSet(5, {0, 1})));
}

TEST(Graph, ConstructionAndNeighbourhoods) {
  Graph g(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_EQ(g.closed_nbhd(VertexSet(4, {0})).to_string(), "{0,1}");
  EXPECT_EQ(g.open_nbhd(VertexSet(4, {1, 2})).to_string(), "{0,3}");
  EXPECT_THROW(Graph(2, {{0, 0}}), FormatError);
  EXPECT_THROW(Graph(2, {{0, 2}}), FormatError);
}

TEST(Graph, InducedAndComponents) {
  Graph g(5, {{0, 1}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3U);
  EXPECT_EQ(comps[1].to_string(), "{2}");
  std::vector<Vertex> ids;
  Graph h = g.induced(VertexSet(5, {1, 3, 4}), &ids);
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(h.edge_count(), 1);
  EXPECT_EQ(ids, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(path(4)));
}

TEST(Io, RoundTripAndErrors) {
  Graph g = cycle(5);
  EXPECT_TRUE(parse_graph(serialize_graph(g)) == g);
  Graph e = parse_graph("4 2\n# comment\n1 2\n3 4\n", {GraphFormat::edge_list, true});
  EXPECT_EQ(e.n(), 4);
  EXPECT_TRUE(e.adjacent(0, 1));
  try {
    parse_graph("p 3 1\ne 0 7\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& err) {
    EXPECT_NE(std::string(err.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("p 3 2\ne 0 1\n"), FormatError);
  Hypergraph h = Hypergraph::from_lists(3, {{0, 1}, {2}});
  EXPECT_TRUE(parse_hypergraph(serialize_hypergraph(h)) == h);
  EXPECT_THROW(parse_hypergraph("p 3 1\nh\n"), FormatError);
  EXPECT_EQ(parse_vertex_set("s 2\n0 3\n", 4).to_string(), "{0,3}");
}

TEST(Validate, PrivateNeighboursAndMinimality) {
  Graph p3 = path(3);
  EXPECT_TRUE(is_minimal_dominating(p3, VertexSet(3, {1})));
  EXPECT_TRUE(is_minimal_dominating(p3, VertexSet(3, {0, 2})));
  EXPECT_FALSE(is_minimal_dominating(p3, VertexSet(3, {0, 1})));
  EXPECT_EQ(private_neighbours(p3, VertexSet(3, {0, 2}), 0).to_string(), "{0}");
  EXPECT_THROW(private_neighbours(p3, VertexSet(3, {0}), 1), std::invalid_argument);
  EXPECT_TRUE(is_vertex_cover(p3, VertexSet(3, {1})));
  Hypergraph h = Hypergraph::from_lists(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_minimal_hitting_set(h, VertexSet(3, {0, 2})));
  EXPECT_FALSE(is_minimal_hitting_set(h, VertexSet(3, {0, 1})));
}

TEST(Validate, AgreesWithBruteForceOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const VertexSet s = VertexSet::from_word(n, m);
        ASSERT_EQ(is_dominating(g, s), brute::dominating(g, m));
        ASSERT_EQ(is_irredundant(g, s), brute::irredundant(g, m));
        ASSERT_EQ(is_minimal_dominating(g, s), brute::minimal_dominating(g, m));
        ASSERT_EQ(is_independent(g, s), brute::independent(g, m));
      }
    }
  }
}

TEST(Fipo, DecomposesEveryMinimalDominatingSet) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!brute::minimal_dominating(g, m)) continue;
        const auto fipo = fipo_decompose(g, VertexSet::from_word(n, m));
        ASSERT_EQ(fipo_violation(g, fipo), "");
        ASSERT_EQ(fipo.f.size(), fipo.p.size());
        ASSERT_TRUE(fipo.dominating_set() == VertexSet::from_word(n, m));
      }
    }
  }
  EXPECT_THROW(fipo_decompose(path(3), VertexSet(3, {0, 1})), std::invalid_argument);
}

TEST(Fipo, P4Example) {
  // D = {1,2} on 0-1-2-3: both members are matched to the leaves.
  const auto fipo = fipo_decompose(path(4), VertexSet(4, {1, 2}));
  EXPECT_EQ(fipo.f.to_string(), "{1,2}");
  EXPECT_EQ(fipo.p.to_string(), "{0,3}");
  EXPECT_TRUE(fipo.i.empty());
  EXPECT_EQ(fipo.matched_to[1], 0);
}

TEST(Coloring, BrooksBoundOnCorpus) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const Coloring c = brooks_coloring(g);
      ASSERT_TRUE(is_proper_coloring(g, c));
      const bool special = g.is_complete() || (g.is_regular() && g.max_degree() == 2 && n % 2 == 1);
      if (!special) ASSERT_LE(c.colours, std::max(2, g.max_degree())) << serialize_graph(g);
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_cubic(12, seed);
    if (!is_connected(g)) continue;
    const Coloring c = brooks_coloring(g);
    EXPECT_TRUE(is_proper_coloring(g, c));
    EXPECT_LE(c.colours, 3);
  }
  // Petersen graph: 3-regular, not complete, needs the full construction.
  const Graph petersen = fixtures::petersen();
  const Coloring pc = brooks_coloring(petersen);
  EXPECT_TRUE(is_proper_coloring(petersen, pc));
  EXPECT_LE(pc.colours, 3);
  EXPECT_EQ(brooks_coloring(complete(4)).colours, 4);
  EXPECT_EQ(brooks_coloring(cycle(5)).colours, 3);
}

TEST(Coloring, IndependentSetHelpers) {
  Graph g = cycle(6);
  VertexSet s = extend_to_maximal_independent(g, g.empty_set());
  EXPECT_TRUE(is_maximal_independent(g, s));
  EXPECT_TRUE(is_maximal_independent(g, extend_to_maximal_independent(g, greedy_min_degree_independent_set(g))));
  VertexSet cover = maximal_matching_cover(g);
  EXPECT_TRUE(is_vertex_cover(g, cover));
}

TEST(Hypergraph, Basics) {
  Hypergraph h = Hypergraph::from_lists(5, {{0, 1}, {1, 2, 3}});
  EXPECT_EQ(h.max_edge_size(), 3);
  EXPECT_EQ(h.covered_vertices().to_string(), "{0,1,2,3}");
  EXPECT_EQ(h.incident_edges(1), (std::vector<int>{0, 1}));
  std::vector<Vertex> ids;
  Hypergraph sub = h.induced(VertexSet(5, {1, 2, 3}), &ids);
  EXPECT_EQ(sub.edge_count(), 1);
  EXPECT_EQ(sub.edge(0).size(), 3);
  EXPECT_THROW(Hypergraph(2, {VertexSet(2)}), FormatError);
  const Hypergraph closed = closed_neighbourhood_hypergraph(path(3));
  EXPECT_EQ(closed.edge_count(), 3);
}

TEST(Corpus, ConnectedGraphCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
    for (const auto& g : graphs) ASSERT_TRUE(is_connected(g));
  }
}

TEST(Corpus, GeneratorsAreSeeded) {
  EXPECT_TRUE(random_gnp(12, 0.3, 7) == random_gnp(12, 0.3, 7));
  Graph sub = random_subcubic(20, 3, true);
  EXPECT_LE(sub.max_degree(), 3);
  EXPECT_TRUE(is_connected(sub));
  Graph cub = random_cubic(10, 1);
  EXPECT_TRUE(cub.is_regular());
  EXPECT_EQ(cub.max_degree(), 3);
  EXPECT_EQ(canonical_code(path(4)), canonical_code(path(4).permuted(std::vector<Vertex>{3, 1, 0, 2})));
  EXPECT_NE(canonical_code(path(4)), canonical_code(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}
