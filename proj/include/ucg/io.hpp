#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucg/coloring.hpp"
#include "ucg/graph.hpp"
#include "ucg/upper_critical.hpp"

namespace ucg::io {

enum class GraphFormat { Edgelist, Graph6 };

/// Malformed input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6: byte 63+n, then the upper triangle (column by column,
/// x(0,1) x(0,2) x(1,2) x(0,3) ...) packed six bits per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);

/// "N M" followed by one "u v" line per edge, edges in lexicographic order.
std::string to_edgelist(const Graph& g);
/// First non-comment line "N M", then M lines "u v"; '#' starts a comment.
Graph from_edgelist(std::string_view text);

std::string serialize(const Graph& g, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);
/// Edgelist if the first meaningful line holds two integers, graph6 otherwise.
GraphFormat detect_format(std::string_view text);
GraphFormat parse_format_name(std::string_view name);

/// "3,2,2" (any order; canonicalised descending).
PartitionSignature parse_signature(std::string_view text);
/// One class label per vertex, comma separated: "0,1,0,1".
ColorPartition parse_partition_labels(std::string_view text);

}  // namespace ucg::io
