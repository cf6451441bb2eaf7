#include "ucg/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucg {

ColorPartition::ColorPartition(int order, std::vector<VertexSet> classes) : order_(order) {
  if (order < 0) throw std::invalid_argument("partition order must be non-negative");
  VertexSet seen;
  for (VertexSet c : classes) {
    if (c.empty()) throw std::invalid_argument("partition classes must be non-empty");
    if (!(c & seen).empty()) throw std::invalid_argument("partition classes must be disjoint");
    seen |= c;
  }
  if (seen != VertexSet::range(order)) {
    throw std::invalid_argument("partition classes must cover exactly {0.." + std::to_string(order - 1) + "}");
  }
  std::sort(classes.begin(), classes.end(),
            [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  classes_ = std::move(classes);
}

ColorPartition ColorPartition::from_labels(std::span<const int> labels) {
  std::map<int, VertexSet> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) throw std::invalid_argument("class labels must be non-negative");
    by_label[labels[v]].insert(static_cast<VertexId>(v));
  }
  std::vector<VertexSet> classes;
  for (const auto& entry : by_label) classes.push_back(entry.second);
  return {static_cast<int>(labels.size()), std::move(classes)};
}

ColorPartition ColorPartition::singletons(int order) {
  std::vector<VertexSet> classes;
  for (int v = 0; v < order; ++v) classes.push_back(VertexSet::singleton(v));
  return {order, std::move(classes)};
}

int ColorPartition::class_of(VertexId v) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].contains(v)) return static_cast<int>(i);
  }
  throw std::out_of_range("vertex " + std::to_string(v) + " is not covered by the partition");
}

std::vector<int> ColorPartition::class_sizes() const {
  std::vector<int> out;
  for (VertexSet c : classes_) out.push_back(c.size());
  return out;
}

bool ColorPartition::is_proper_for(const Graph& g) const {
  if (order_ != g.order()) return false;
  for (VertexSet c : classes_) {
    for (VertexId v : c) {
      if (!(g.neighbors(v) & c).empty()) return false;
    }
  }
  return true;
}

namespace {

// Vertices by descending degree, ties by lowest index.
std::vector<VertexId> search_order(const Graph& g) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return order;
}

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), order_(search_order(g)) {}

  std::optional<std::vector<VertexSet>> run() {
    classes_.assign(static_cast<std::size_t>(k_), VertexSet{});
    if (!assign(0, 0)) return std::nullopt;
    classes_.erase(std::remove_if(classes_.begin(), classes_.end(), [](VertexSet c) { return c.empty(); }),
                   classes_.end());
    return classes_;
  }

 private:
  bool assign(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const VertexId v = order_[i];
    const VertexSet nb = g_.neighbors(v);
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      VertexSet& cls = classes_[static_cast<std::size_t>(c)];
      if (!(cls & nb).empty()) continue;
      cls.insert(v);
      if (assign(i + 1, std::max(used, c + 1))) return true;
      cls.erase(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<VertexId> order_;
  std::vector<VertexSet> classes_;
};

// Restricted-growth enumeration of proper partitions into exactly k classes.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const Graph& g, int k, long long limit) : g_(g), k_(k), limit_(limit) {}

  template <typename Visit>
  void run(Visit&& visit) {
    classes_.clear();
    classes_.reserve(static_cast<std::size_t>(k_));
    recurse(0, visit);
  }

  long long found() const { return found_; }

 private:
  template <typename Visit>
  bool recurse(VertexId v, Visit& visit) {
    const int n = g_.order();
    const int open = static_cast<int>(classes_.size());
    if (n - v < k_ - open) return true;
    if (v == n) {
      ++found_;
      visit(classes_);
      return limit_ < 0 || found_ < limit_;
    }
    const VertexSet nb = g_.neighbors(v);
    for (int c = 0; c < open; ++c) {
      VertexSet& cls = classes_[static_cast<std::size_t>(c)];
      if (!(cls & nb).empty()) continue;
      cls.insert(v);
      const bool go_on = recurse(v + 1, visit);
      classes_[static_cast<std::size_t>(c)].erase(v);
      if (!go_on) return false;
    }
    if (open < k_) {
      classes_.push_back(VertexSet::singleton(v));
      const bool go_on = recurse(v + 1, visit);
      classes_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  long long limit_;
  long long found_ = 0;
  std::vector<VertexSet> classes_;
};

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = max_clique_size(g); k <= g.order(); ++k) {
    if (Colorer(g, k).run()) return k;
  }
  return g.order();  // unreachable: singletons always work
}

std::optional<ColorPartition> find_partition(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n || (k == 0 && n > 0)) return std::nullopt;
  if (n == 0) return ColorPartition(0, {});
  auto classes = Colorer(g, k).run();
  if (!classes) return std::nullopt;
  // Fewer classes than requested: split off single vertices, which keeps every class independent.
  while (static_cast<int>(classes->size()) < k) {
    auto big = std::find_if(classes->begin(), classes->end(), [](VertexSet c) { return c.size() >= 2; });
    const VertexId v = big->first();
    big->erase(v);
    classes->push_back(VertexSet::singleton(v));
  }
  return ColorPartition(n, std::move(*classes));
}

ColorPartition optimal_coloring(const Graph& g) {
  return *find_partition(g, chromatic_number(g));
}

std::vector<ColorPartition> enumerate_proper_partitions(const Graph& g, int k) {
  std::vector<ColorPartition> out;
  if (k < 0) return out;
  PartitionEnumerator(g, k, -1).run(
      [&](const std::vector<VertexSet>& classes) { out.emplace_back(g.order(), classes); });
  return out;
}

long long count_proper_partitions(const Graph& g, int k, long long limit) {
  if (k < 0) return 0;
  PartitionEnumerator e(g, k, limit);
  e.run([](const std::vector<VertexSet>&) {});
  return e.found();
}

bool is_uniquely_colorable(const Graph& g) {
  return count_proper_partitions(g, chromatic_number(g), 2) == 1;
}

Graph quotient(const Graph& g, const ColorPartition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition does not cover the graph's vertices");
  const auto& classes = p.classes();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    VertexSet reach;
    for (VertexId v : classes[i]) reach |= g.neighbors(v);
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (!(reach & classes[j]).empty()) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    }
  }
  return Graph::from_edges(p.size(), edges);
}

bool is_collapse(const Graph& g, const ColorPartition& p) {
  return p.is_proper_for(g) && quotient(g, p).is_complete();
}

bool is_critical_vertex(const Graph& g, VertexId x) {
  g.check_vertex(x);
  return chromatic_number(g.without_vertex(x)) < chromatic_number(g);
}

bool is_critical_edge(const Graph& g, Edge e) {
  if (!g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
  }
  return chromatic_number(g.without_edge(e.u, e.v)) < chromatic_number(g);
}

}  // namespace ucg
