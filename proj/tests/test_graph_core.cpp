#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "ucg/graph.hpp"

using namespace ucg;

TEST(VertexSet, BasicOperations) {
  VertexSet s = VertexSet::range(5);
  EXPECT_EQ(s.size(), 5);
  s.erase(2);
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.to_vector(), (std::vector<VertexId>{0, 1, 3, 4}));
  EXPECT_TRUE(VertexSet::singleton(3).is_subset_of(s));
  EXPECT_EQ((s - VertexSet::singleton(0)).first(), 1);
  EXPECT_TRUE(VertexSet{}.empty());
}

TEST(Graph, ConstructorsAndQueries) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.edge_count(), 5);
  EXPECT_TRUE(c5.adjacent(4, 0));
  EXPECT_FALSE(c5.adjacent(0, 2));
  EXPECT_EQ(Graph::path(4).edge_count(), 3);
  EXPECT_TRUE(Graph::complete(6).is_complete());
  EXPECT_EQ(Graph(3).edge_count(), 0);
  EXPECT_EQ(Graph().order(), 0);
  EXPECT_TRUE(Graph().is_complete());
}

TEST(Graph, EdgesAndNonEdgesPartitionPairs) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}, {1, 3}});
  const auto e = g.edges();
  const auto ne = g.non_edges();
  EXPECT_EQ(e, (std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}}));
  EXPECT_EQ(ne, (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}}));
}

TEST(Graph, RejectsInvalidInput) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph(kMaxOrder + 1), std::length_error);
  EXPECT_THROW(Graph(3).adjacent(0, 5), std::out_of_range);
  EXPECT_THROW(Graph(2).with_edge(1, 1), std::invalid_argument);
  EXPECT_EQ(Graph::complete(2).with_edge(0, 1), Graph::complete(2));
  EXPECT_EQ(Graph(2).without_edge(0, 1), Graph(2));
  const std::uint64_t asym[] = {0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(asym), std::invalid_argument);
}

TEST(Graph, DeleteVertexCompactsIndices) {
  const Graph p = Graph::path(4);  // 0-1-2-3
  const Graph h = p.without_vertex(1);
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(Graph, InducedAndWithVertex) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(k4.induced(VertexSet::range(3)), Graph::complete(3));
  const Graph star = Graph(3).with_vertex(VertexSet::range(3));
  EXPECT_EQ(star.degree(3), 3);
  EXPECT_EQ(star.edge_count(), 3);
}

TEST(Graph, Neighborhoods) {
  const Graph p = Graph::path(3);
  EXPECT_EQ(neighborhood(p, 1).to_vector(), (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(neighborhood(p, 0, true).to_vector(), (std::vector<VertexId>{0, 1}));
  EXPECT_TRUE(is_complete_vertex(p, 1));
  EXPECT_FALSE(is_complete_vertex(p, 0));
}

TEST(GraphProperty, ComplementIsInvolutionAndCountsAdd) {
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      const Graph c = complement(g);
      ASSERT_EQ(complement(c), g);
      ASSERT_EQ(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
    }
}

TEST(GraphProperty, DegreeSumIsTwiceEdgeCount) {
  for (const Graph& g : oracle::all_graphs(5)) {
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
    ASSERT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(GraphProperty, JoinAddsAllCrossPairs) {
  for (const Graph& a : oracle::all_graphs(3))
    for (const Graph& b : oracle::all_graphs(3)) {
      const Graph j = join(a, b);
      ASSERT_EQ(j.order(), 6);
      ASSERT_EQ(j.edge_count(), a.edge_count() + b.edge_count() + 9);
      ASSERT_EQ(j.induced(VertexSet::range(3)), a);
    }
}

TEST(GraphProperty, ConnectivityMatchesSearch) {
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) ASSERT_EQ(is_connected(g), oracle::connected(g));
}

namespace {

int brute_clique(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const VertexSet set(s);
    bool clique = true;
    for (VertexId u : set)
      for (VertexId v : set)
        if (u < v && !g.adjacent(u, v)) clique = false;
    if (clique) best = std::max(best, set.size());
  }
  return best;
}

}  // namespace

TEST(GraphProperty, CliqueNumberMatchesSubsetScan) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      const int w = brute_clique(g);
      ASSERT_EQ(max_clique_size(g), w);
      ASSERT_TRUE(contains_clique(g, w));
      ASSERT_FALSE(contains_clique(g, w + 1));
    }
  EXPECT_THROW(contains_clique(Graph(2), 0), std::invalid_argument);
}

TEST(GraphProperty, IsomorphismAgreesWithPermutationOracle) {
  const auto graphs = oracle::all_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j)
      ASSERT_EQ(is_isomorphic(graphs[i], graphs[j]), oracle::isomorphic(graphs[i], graphs[j])) << i << ' ' << j;
}

TEST(Graph, IsomorphismClassesOnFourVertices) {
  std::set<CanonicalForm> forms;
  for (const Graph& g : oracle::all_graphs(4)) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 11u);
  EXPECT_THROW(is_isomorphic(Graph::cycle(9), Graph::cycle(9)), std::length_error);
}
