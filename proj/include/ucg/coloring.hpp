#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ucg/graph.hpp"

namespace ucg {

/// A partition of {0, ..., order-1} into non-empty classes, ordered by each
/// class's smallest vertex. Whether the classes are independent depends on the
/// graph it is applied to; see is_proper_for().
class ColorPartition {
 public:
  ColorPartition() = default;
  /// Throws std::invalid_argument unless `classes` are non-empty, pairwise disjoint and cover {0..order-1}.
  ColorPartition(int order, std::vector<VertexSet> classes);
  /// labels[v] is the class label of vertex v; labels are arbitrary non-negative integers.
  static ColorPartition from_labels(std::span<const int> labels);
  static ColorPartition singletons(int order);

  int order() const { return order_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  /// Index of the class holding v.
  int class_of(VertexId v) const;
  /// The class holding v (the c*(v) of a coloring).
  VertexSet class_containing(VertexId v) const { return classes_[static_cast<std::size_t>(class_of(v))]; }
  std::vector<int> class_sizes() const;
  /// Every class is an independent set of g and the partition covers V(g).
  bool is_proper_for(const Graph& g) const;

  friend bool operator==(const ColorPartition&, const ColorPartition&) = default;

 private:
  int order_ = 0;
  std::vector<VertexSet> classes_;
};

/// Exact chromatic number; 0 for the empty graph.
int chromatic_number(const Graph& g);
/// Some proper partition with exactly k classes, if one exists (deterministic).
std::optional<ColorPartition> find_partition(const Graph& g, int k);
/// A proper partition with chromatic_number(g) classes.
ColorPartition optimal_coloring(const Graph& g);

/// All partitions of V(g) into exactly k non-empty independent classes, in
/// restricted-growth order (vertex 0 first, each new class opened by its smallest vertex).
std::vector<ColorPartition> enumerate_proper_partitions(const Graph& g, int k);
/// Number of proper k-partitions, stopping early once `limit` is reached.
long long count_proper_partitions(const Graph& g, int k, long long limit = -1);
bool is_uniquely_colorable(const Graph& g);

/// Contracts each class of p to one vertex; class vertices are adjacent iff some edge crosses between them.
Graph quotient(const Graph& g, const ColorPartition& p);
/// p consists of independent classes and its quotient is complete.
bool is_collapse(const Graph& g, const ColorPartition& p);

bool is_critical_vertex(const Graph& g, VertexId x);
bool is_critical_edge(const Graph& g, Edge e);

}  // namespace ucg
