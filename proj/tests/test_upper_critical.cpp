#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ucg/coloring.hpp"
#include "ucg/enumeration.hpp"
#include "ucg/upper_critical.hpp"

using namespace ucg;

namespace {

PartitionSignature sig(std::vector<int> parts) { return PartitionSignature(std::move(parts)); }

}  // namespace

TEST(Signature, CanonicalFormAndNotation) {
  const PartitionSignature s = sig({1, 2, 2});
  EXPECT_EQ(s.parts(), (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.chroma(), 3);
  EXPECT_EQ(s.to_string(), "2,2,1");
  EXPECT_EQ(s.to_set_notation(), "{1,2,2}");
  EXPECT_EQ(sig({1, 1, 1}).to_set_notation(), "K_3");
  EXPECT_TRUE(sig({1, 1, 1}).is_complete_graph());
  EXPECT_THROW(sig({2, 0}), std::invalid_argument);
  EXPECT_EQ(PartitionSignature().order(), 0);
}

TEST(Definition, Examples) {
  EXPECT_TRUE(is_upper_critical_def(Graph::cycle(4)));
  EXPECT_FALSE(is_upper_critical_def(Graph::cycle(5)));
  EXPECT_TRUE(is_upper_critical_def(Graph::complete(4)));
  EXPECT_TRUE(is_upper_critical_def(Graph(3)));
}

TEST(Definition, MatchesOracleUpToFiveVertices) {
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) ASSERT_EQ(is_upper_critical_def(g), oracle::upper_critical(g));
}

TEST(Recognize, Examples) {
  EXPECT_EQ(recognize(Graph::cycle(4)), sig({2, 2}));
  EXPECT_FALSE(recognize(Graph::cycle(5)).has_value());
  EXPECT_EQ(recognize(Graph::complete(1)), sig({1}));
  EXPECT_EQ(recognize(Graph(3)), sig({3}));
  EXPECT_EQ(recognize(Graph()), PartitionSignature());
}

TEST(Recognize, MatchesTransitivityOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      const auto s = recognize(g);
      ASSERT_EQ(s.has_value(), oracle::complete_multipartite(g));
      if (s) {
        ASSERT_EQ(s->parts(), oracle::class_sizes(g));
        const auto classes = multipartite_classes(g);
        ASSERT_TRUE(classes.has_value());
        ASSERT_TRUE(classes->is_proper_for(g));
      }
    }
}

TEST(Construct, Examples) {
  const Graph g = construct(sig({1, 1, 2}));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_EQ(construct(sig({2, 2})), Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(is_isomorphic(construct(sig({2, 2})), Graph::cycle(4)));
  EXPECT_EQ(construct(sig({1, 1, 1})), Graph::complete(3));
  EXPECT_FALSE(is_isomorphic(construct(sig({2, 2})), construct(sig({1, 3}))));
}

TEST(Construct, RoundTripsThroughRecognize) {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      for (const PartitionSignature& s : partitions_of(n, k)) {
        const Graph g = construct(s);
        ASSERT_EQ(recognize(g), s);
        int cross = n * (n - 1) / 2;
        for (int p : s.parts()) cross -= p * (p - 1) / 2;
        ASSERT_EQ(g.edge_count(), cross);
      }
}

TEST(Construct, DistinctSignaturesGiveNonIsomorphicGraphs) {
  for (int n = 1; n <= 7; ++n) {
    const auto sigs = upper_critical_signatures(n);
    for (std::size_t i = 0; i < sigs.size(); ++i)
      for (std::size_t j = i + 1; j < sigs.size(); ++j)
        ASSERT_FALSE(is_isomorphic(construct(sigs[i]), construct(sigs[j])));
  }
}

TEST(Saturate, Examples) {
  const Graph c5 = Graph::cycle(5);
  const Graph g = saturate_from_coloring(c5, ColorPartition::from_labels(std::vector<int>{0, 1, 0, 2, 1}));
  EXPECT_EQ(g.edge_count(), 8);
  EXPECT_EQ(recognize(g), sig({2, 2, 1}));
  EXPECT_TRUE(is_upper_critical_def(g));

  const Graph sq = Graph::cycle(4);
  EXPECT_EQ(saturate_from_coloring(sq, optimal_coloring(sq)), sq);
  EXPECT_EQ(saturate_from_coloring(Graph(2), ColorPartition::singletons(2)), Graph::complete(2));
  EXPECT_THROW(saturate_from_coloring(sq, ColorPartition::from_labels(std::vector<int>{0, 0, 1, 1})),
               std::invalid_argument);
}

TEST(Saturate, AnyProperColoringYieldsUpperCriticalSupergraph) {
  for (const Graph& h : oracle::all_graphs(4))
    for (int k = 1; k <= 4; ++k)
      for (const ColorPartition& p : enumerate_proper_partitions(h, k)) {
        const Graph g = saturate_from_coloring(h, p);
        ASSERT_TRUE(oracle::upper_critical(g));
        for (const Edge& e : h.edges()) ASSERT_TRUE(g.adjacent(e.u, e.v));
        ASSERT_EQ(oracle::chromatic(g), k);
      }
}

TEST(Neighborhood, StructureHoldsAndLiteralFormulaDoesNot) {
  EXPECT_TRUE(neighborhood_structure_holds(Graph::cycle(4)));
  EXPECT_TRUE(neighborhood_structure_holds(Graph::complete(5)));
  EXPECT_TRUE(neighborhood_structure_holds(construct(sig({1, 2, 2}))));
  EXPECT_FALSE(literal_neighborhood_formula_holds(Graph::cycle(4)));
  EXPECT_THROW(neighborhood_structure_holds(Graph::cycle(5)), std::invalid_argument);
}
