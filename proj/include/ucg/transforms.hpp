#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ucg/graph.hpp"

namespace ucg {

/// Coordinate (order, chromatic number) of a graph.
struct SpacePoint {
  int order = 0;
  int chroma = 0;

  std::string to_string() const { return "(" + std::to_string(order) + "," + std::to_string(chroma) + ")"; }
  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

SpacePoint space_point(const Graph& g);

namespace transform {
struct DeleteVertex { VertexId x; };
struct IdentifyVertices { VertexId x; VertexId y; };
struct ContractEdge { VertexId x; VertexId y; };
struct AddCopy { VertexId x; };
struct AddCompleteVertex {};
struct AddEdge { VertexId x; VertexId y; };
struct RemoveCriticalEdges { int m; };
}  // namespace transform

using TransformKind =
    std::variant<transform::DeleteVertex, transform::IdentifyVertices, transform::ContractEdge, transform::AddCopy,
                 transform::AddCompleteVertex, transform::AddEdge, transform::RemoveCriticalEdges>;

/// e.g. "contract_edge x=0 y=1"
std::string describe(const TransformKind& t);

/// Side conditions of the add-edge closure claim, evaluated for the pair (x, y).
struct AddEdgeConditions {
  bool closed_neighborhood_complete = false;  // induced subgraph on N[x] is complete
  int closed_neighborhood_size = 0;           // |N[x]|
  int complement_edges = 0;                   // |E(complement of g)|
  int order = 0;
  int chroma = 0;
  /// N[x] does not induce a complete graph on exactly chroma vertices.
  bool cond1_strict = false;
  /// N[x] does not induce any complete graph.
  bool cond1_loose = false;
  /// |E(complement)| <= order - chroma.
  bool cond2 = false;

  std::string to_string() const;
};

struct MoveRecord {
  SpacePoint before;
  /// Empty when the input is not upper-critical or no case of the table covers the move.
  std::optional<SpacePoint> predicted;
  SpacePoint actual;
  /// The result passes is_upper_critical_def.
  bool preserved = false;
  std::optional<AddEdgeConditions> conditions;
};

struct TransformResult {
  Graph graph;
  MoveRecord record;
};

/// Which vertices the "add a copy" case of the table covers.
enum class CopyReading {
  NonCompleteOnly,  // copies of non-complete vertices only, as stated
  AnyVertex,        // copies of any vertex, complete ones included
};

/// Thrown by predict_move for a move none of the table-travel cases describes.
class UncoveredTransform : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coordinate the table-travel case analysis predicts for applying t to the
/// upper-critical graph g. Uses only g's coordinate and whether the operands
/// are complete vertices; the result graph is never built.
SpacePoint predict_move(const Graph& g, const TransformKind& t, CopyReading reading = CopyReading::NonCompleteOnly);

using Predictor = std::function<SpacePoint(const Graph&, const TransformKind&, CopyReading)>;

/// Replaces non-adjacent or adjacent x, y by one vertex with neighborhood N(x) | N(y).
/// The merged vertex takes the smaller index; the larger index is removed.
Graph merge_vertices(const Graph& g, VertexId x, VertexId y);

TransformResult delete_vertex(const Graph& g, VertexId x);
/// Requires x != y and xy not an edge.
TransformResult identify_vertices(const Graph& g, VertexId x, VertexId y);
/// Requires xy to be an edge.
TransformResult contract_edge(const Graph& g, VertexId x, VertexId y);
/// Appends y with N(y) = N(x); y is not adjacent to x.
TransformResult add_copy(const Graph& g, VertexId x);
TransformResult add_complete_vertex(const Graph& g);
/// Adds xy and reports the closure conditions beside the definitional verdict.
TransformResult add_edge_with_conditions(const Graph& g, VertexId x, VertexId y);

AddEdgeConditions evaluate_add_edge_conditions(const Graph& g, VertexId x, VertexId y);

inline constexpr int kCriticalSearchBound = 7;

struct CriticalSequence {
  std::vector<Edge> removed;
  Graph result;
};

/// First sequence (lexicographic depth-first order) of m edge removals from
/// K_k in which each removed edge lowers the chromatic number and the final
/// graph is upper-critical.
std::optional<CriticalSequence> critical_sequence_search(int k, int m);

/// Dispatches to the operation named by t. RemoveCriticalEdges{m} requires g
/// complete and throws std::runtime_error when no sequence exists.
TransformResult apply_transform(const Graph& g, const TransformKind& t);

}  // namespace ucg
