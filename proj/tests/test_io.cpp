#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ucg/io.hpp"

using namespace ucg;
using namespace ucg::io;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(Edge::make(i, (i + 1) % 5));
    e.push_back(Edge::make(i, i + 5));
    e.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, e);
}

}  // namespace

// Reference strings produced by networkx.to_graph6_bytes for the same labelings.
TEST(Graph6, KnownVectors) {
  EXPECT_EQ(to_graph6(Graph::complete(4)), "C~");
  EXPECT_EQ(to_graph6(Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
  EXPECT_EQ(to_graph6(Graph::cycle(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph::path(7)), "FhCGG");
  EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(to_graph6(Graph()), "?");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(construct(PartitionSignature({3, 3}))), "EFz_");
  EXPECT_EQ(to_graph6(construct(PartitionSignature({2, 2}))), "C]");
}

TEST(Graph6, Decodes) {
  EXPECT_EQ(from_graph6("DQc"), Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  EXPECT_EQ(from_graph6(">>graph6<<C~\n"), Graph::complete(4));
  EXPECT_EQ(from_graph6("IheA@GUAo"), petersen());
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);       // missing body
  EXPECT_THROW(from_graph6("C~~"), ParseError);     // trailing byte
  EXPECT_THROW(from_graph6("C\x7f"), ParseError);   // out of range
  EXPECT_THROW(from_graph6("B@"), ParseError);      // padding bit set
}

TEST(Graph6, RoundTripsAllGraphsOnFiveVertices) {
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) ASSERT_EQ(from_graph6(to_graph6(g)), g);
}

TEST(Edgelist, FormatAndParse) {
  const Graph c4 = Graph::cycle(4);
  EXPECT_EQ(to_edgelist(c4), "4 4\n0 1\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(from_edgelist("# square\n4 4\n0 1\n1 2  # side\n2 3\n3 0\n"), c4);
  EXPECT_EQ(from_edgelist("3 0\n"), Graph(3));
  for (const Graph& g : oracle::all_graphs(4)) ASSERT_EQ(from_edgelist(to_edgelist(g)), g);
}

TEST(Edgelist, RejectsMalformed) {
  EXPECT_THROW(from_edgelist(""), ParseError);
  EXPECT_THROW(from_edgelist("3 2\n0 1\n"), ParseError);       // too few edges
  EXPECT_THROW(from_edgelist("3 1\n0 0\n"), ParseError);       // loop
  EXPECT_THROW(from_edgelist("3 2\n0 1\n1 0\n"), ParseError);  // duplicate
  EXPECT_THROW(from_edgelist("3 1\n0 3\n"), ParseError);       // out of range
  EXPECT_THROW(from_edgelist("3 1\n0 x\n"), ParseError);
}

TEST(Formats, DetectAndDispatch) {
  EXPECT_EQ(detect_format("4 4\n0 1\n"), GraphFormat::Edgelist);
  EXPECT_EQ(detect_format("# c\n3 0\n"), GraphFormat::Edgelist);
  EXPECT_EQ(detect_format("C~\n"), GraphFormat::Graph6);
  EXPECT_EQ(parse_format_name("graph6"), GraphFormat::Graph6);
  EXPECT_EQ(parse_graph(serialize(Graph::cycle(5), GraphFormat::Edgelist), GraphFormat::Edgelist), Graph::cycle(5));
}

TEST(Parsers, SignatureAndLabels) {
  EXPECT_EQ(parse_signature("2,3,1"), PartitionSignature({3, 2, 1}));
  EXPECT_THROW(parse_signature("2,,1"), ParseError);
  EXPECT_THROW(parse_signature("2,0"), ParseError);
  const ColorPartition p = parse_partition_labels("0,1,0,1");
  EXPECT_EQ(p.size(), 2);
  EXPECT_THROW(parse_partition_labels("0,a"), ParseError);
}
