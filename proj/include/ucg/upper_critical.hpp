#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucg/coloring.hpp"
#include "ucg/graph.hpp"

namespace ucg {

/// Multiset of class sizes {n_1 >= n_2 >= ... >= n_k} of a complete
/// multipartite graph. The order is the sum of the parts, the chromatic number
/// the number of parts. The empty signature stands for the empty graph.
class PartitionSignature {
 public:
  PartitionSignature() = default;
  /// Accepts parts in any order; throws std::invalid_argument on a part < 1.
  explicit PartitionSignature(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int order() const;
  int chroma() const { return static_cast<int>(parts_.size()); }
  bool is_complete_graph() const;

  /// "3,2,2"
  std::string to_string() const;
  /// Ascending set notation, "{1,2,2}", or "K_n" for complete graphs.
  std::string to_set_notation() const;

  friend bool operator==(const PartitionSignature&, const PartitionSignature&) = default;
  friend auto operator<=>(const PartitionSignature&, const PartitionSignature&) = default;

 private:
  std::vector<int> parts_;
};

/// Ground truth: g is complete, or every missing edge raises the chromatic number.
bool is_upper_critical_def(const Graph& g);

/// Classes of g when g is complete multipartite: the components of the
/// complement, each of which must be a clique there.
std::optional<ColorPartition> multipartite_classes(const Graph& g);
/// Signature of g if g is complete multipartite, otherwise nothing.
std::optional<PartitionSignature> recognize(const Graph& g);

/// Join of edgeless graphs of the given sizes; the first n_1 vertices form the largest class, and so on.
Graph construct(const PartitionSignature& s);

/// Adds every pair in different classes of p to h. Throws std::invalid_argument if p is not proper for h.
Graph saturate_from_coloring(const Graph& h, const ColorPartition& p);

/// For the unique optimal partition, N(x) is exactly the set of vertices outside x's class.
/// Throws std::invalid_argument when g is not upper-critical.
bool neighborhood_structure_holds(const Graph& g);
/// The formula N(x) = V - {y | c(x) != c(y)} read literally (N(x) equals x's own class).
bool literal_neighborhood_formula_holds(const Graph& g);

}  // namespace ucg
