#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ucg/vertex_set.hpp"

#ifndef UCG_MAX_ORDER
#define UCG_MAX_ORDER 32
#endif

namespace ucg {

/// Largest order a Graph may have. Raise with -DUCG_MAX_ORDER (at most 64).
inline constexpr int kMaxOrder = UCG_MAX_ORDER;
static_assert(kMaxOrder >= 1 && kMaxOrder <= 64, "adjacency rows are single 64-bit words");

/// Largest order accepted by canonical_form / is_isomorphic (brute force over permutations).
inline constexpr int kCanonicalizationBound = 8;

/// Undirected edge with u < v. Edges compare lexicographically by (u, v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge make(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices {0, ..., order-1}.
///
/// Adjacency is stored as one bit row per vertex. All "modifying" operations
/// return a new value; vertex deletion compacts higher indices downward.
class Graph {
 public:
  /// The empty graph (no vertices).
  Graph() = default;
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// Vertex i is adjacent to j iff bit j of rows[i] is set. Rows must be symmetric and loop-free.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  bool adjacent(VertexId u, VertexId v) const;
  /// Open neighborhood; unchecked fast path used by the algorithms.
  VertexSet neighbors(VertexId v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  int degree(VertexId v) const { return neighbors(v).size(); }
  int edge_count() const;
  bool is_complete() const { return 2 * edge_count() == order() * (order() - 1); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  /// Missing edges (pairs u < v, u not adjacent to v) in lexicographic order.
  std::vector<Edge> non_edges() const;

  Graph with_edge(VertexId u, VertexId v) const;
  Graph without_edge(VertexId u, VertexId v) const;
  Graph without_vertex(VertexId x) const;
  /// Appends a vertex whose neighborhood is `nbrs` (a subset of the current vertices).
  Graph with_vertex(VertexSet nbrs) const;
  /// Induced subgraph on `keep`, relabelled in increasing index order.
  Graph induced(VertexSet keep) const;

  void check_vertex(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// N(x), or N[x] when `closed` is set.
VertexSet neighborhood(const Graph& g, VertexId x, bool closed = false);
Graph complement(const Graph& g);
/// Disjoint union plus every cross pair; g2's vertices are renumbered after g1's.
Graph join(const Graph& g1, const Graph& g2);
/// The empty graph and K_1 count as connected.
bool is_connected(const Graph& g);
int max_clique_size(const Graph& g);
bool contains_clique(const Graph& g, int k);
/// x is complete when N[x] = V(g).
bool is_complete_vertex(const Graph& g, VertexId x);

/// Minimum upper-triangle adjacency code over all vertex permutations.
struct CanonicalForm {
  int order = 0;
  std::uint64_t code = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace ucg
