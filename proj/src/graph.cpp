#include "ucg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucg {

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("graph order must be non-negative");
  if (order > kMaxOrder) {
    throw std::length_error("graph order " + std::to_string(order) + " exceeds maximum " +
                            std::to_string(kMaxOrder));
  }
}

void clique_search(const Graph& g, int size, VertexSet candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + candidates.size() <= best) return;
    const VertexId v = candidates.first();
    clique_search(g, size + 1, candidates & g.neighbors(v), best);
    candidates.erase(v);
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.rows_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    g.rows_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    g.rows_[static_cast<std::size_t>(v)] = (VertexSet::range(n) - VertexSet::singleton(v)).bits();
  }
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back(Edge::make(v, (v + 1) % n));
  return from_edges(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return from_edges(n, es);
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  const std::uint64_t mask = VertexSet::range(n).bits();
  for (int u = 0; u < n; ++u) {
    const std::uint64_t row = rows[static_cast<std::size_t>(u)];
    if ((row & ~mask) != 0) throw std::invalid_argument("adjacency row references a missing vertex");
    if ((row >> u) & 1U) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    for (VertexId v : VertexSet(row)) {
      if (!((rows[static_cast<std::size_t>(v)] >> u) & 1U)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
    g.rows_[static_cast<std::size_t>(u)] = row;
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return neighbors(u).contains(v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u) - VertexSet::range(u + 1)) out.push_back({u, v});
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexId v : vertices() - VertexSet::range(u + 1) - neighbors(u)) out.push_back({u, v});
  }
  return out;
}

Graph Graph::with_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  g.rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  return g;
}

Graph Graph::without_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  g.rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  return g;
}

Graph Graph::without_vertex(VertexId x) const {
  check_vertex(x);
  return induced(vertices() - VertexSet::singleton(x));
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (!nbrs.is_subset_of(vertices())) throw std::invalid_argument("new vertex neighbors must exist");
  check_order(order() + 1);
  Graph g = *this;
  const int y = order();
  for (VertexId v : nbrs) g.rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << y;
  g.rows_.push_back(nbrs.bits());
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<VertexId> old_of_new = keep.to_vector();
  Graph g(static_cast<int>(old_of_new.size()));
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    const VertexSet nb = neighbors(old_of_new[i]);
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < old_of_new.size(); ++j) {
      if (nb.contains(old_of_new[j])) row |= std::uint64_t{1} << j;
    }
    g.rows_[i] = row;
  }
  return g;
}

VertexSet neighborhood(const Graph& g, VertexId x, bool closed) {
  g.check_vertex(x);
  VertexSet out = g.neighbors(x);
  if (closed) out.insert(x);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    rows.push_back((g.vertices() - g.neighbors(v) - VertexSet::singleton(v)).bits());
  }
  return Graph::from_rows(rows);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n);
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n));
  const std::uint64_t right = (VertexSet::range(n) - VertexSet::range(n1)).bits();
  for (int v = 0; v < n1; ++v) rows.push_back(g1.neighbors(v).bits() | right);
  for (int v = 0; v < g2.order(); ++v) {
    rows.push_back((g2.neighbors(v).bits() << n1) | VertexSet::range(n1).bits());
  }
  return Graph::from_rows(rows);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

int max_clique_size(const Graph& g) {
  int best = 0;
  clique_search(g, 0, g.vertices(), best);
  return best;
}

bool contains_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  return max_clique_size(g) >= k;
}

bool is_complete_vertex(const Graph& g, VertexId x) {
  return neighborhood(g, x, /*closed=*/true) == g.vertices();
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalizationBound) {
    throw std::length_error("canonical form is limited to order " +
                            std::to_string(kCanonicalizationBound));
  }
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, ~std::uint64_t{0}};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      const VertexSet row = g.neighbors(perm[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) | static_cast<std::uint64_t>(row.contains(perm[static_cast<std::size_t>(j)]));
      }
    }
    best.code = std::min(best.code, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() > kCanonicalizationBound || g2.order() > kCanonicalizationBound) {
    throw std::length_error("canonical form is limited to order " +
                            std::to_string(kCanonicalizationBound));
  }
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace ucg
