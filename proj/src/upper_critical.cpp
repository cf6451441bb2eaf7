#include "ucg/upper_critical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ucg {

PartitionSignature::PartitionSignature(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("signature parts must be positive integers");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PartitionSignature::order() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool PartitionSignature::is_complete_graph() const {
  return !parts_.empty() && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string PartitionSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string PartitionSignature::to_set_notation() const {
  if (is_complete_graph()) return "K_" + std::to_string(order());
  std::string out = "{";
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (it != parts_.rbegin()) out += ',';
    out += std::to_string(*it);
  }
  return out + "}";
}

bool is_upper_critical_def(const Graph& g) {
  if (g.is_complete()) return true;
  const int k = chromatic_number(g);
  for (const Edge& e : g.non_edges()) {
    if (find_partition(g.with_edge(e.u, e.v), k)) return false;
  }
  return true;
}

std::optional<ColorPartition> multipartite_classes(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> classes;
  VertexSet assigned;
  for (VertexId v : all) {
    if (assigned.contains(v)) continue;
    const VertexSet cls = all - g.neighbors(v);
    for (VertexId u : cls) {
      if (all - g.neighbors(u) != cls) return std::nullopt;
    }
    classes.push_back(cls);
    assigned |= cls;
  }
  return ColorPartition(g.order(), std::move(classes));
}

std::optional<PartitionSignature> recognize(const Graph& g) {
  auto classes = multipartite_classes(g);
  if (!classes) return std::nullopt;
  return PartitionSignature(classes->class_sizes());
}

Graph construct(const PartitionSignature& s) {
  Graph g;
  for (int part : s.parts()) g = join(g, Graph(part));
  return g;
}

Graph saturate_from_coloring(const Graph& h, const ColorPartition& p) {
  if (!p.is_proper_for(h)) throw std::invalid_argument("partition is not a proper coloring of the graph");
  std::vector<std::uint64_t> rows;
  for (VertexId v = 0; v < h.order(); ++v) rows.push_back((h.vertices() - p.class_containing(v)).bits());
  return Graph::from_rows(rows);
}

namespace {

ColorPartition require_unique_partition(const Graph& g) {
  if (!is_upper_critical_def(g)) throw std::invalid_argument("graph is not upper-critical");
  return optimal_coloring(g);
}

}  // namespace

bool neighborhood_structure_holds(const Graph& g) {
  const ColorPartition p = require_unique_partition(g);
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.neighbors(x) != g.vertices() - p.class_containing(x)) return false;
  }
  return true;
}

bool literal_neighborhood_formula_holds(const Graph& g) {
  const ColorPartition p = require_unique_partition(g);
  for (VertexId x = 0; x < g.order(); ++x) {
    const VertexSet other_colors = g.vertices() - p.class_containing(x);
    if (g.neighbors(x) != g.vertices() - other_colors) return false;
  }
  return true;
}

}  // namespace ucg
