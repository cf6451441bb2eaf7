#include "ucg/transforms.hpp"

#include <unordered_set>

#include "ucg/coloring.hpp"
#include "ucg/upper_critical.hpp"

namespace ucg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string bool_str(bool b) { return b ? "true" : "false"; }

void require_distinct_nonadjacent(const Graph& g, VertexId x, VertexId y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("operands must be two distinct vertices");
  if (g.adjacent(x, y)) {
    throw std::invalid_argument("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are adjacent");
  }
}

void require_edge(const Graph& g, VertexId x, VertexId y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y || !g.adjacent(x, y)) {
    throw std::invalid_argument("(" + std::to_string(x) + "," + std::to_string(y) + ") is not an edge");
  }
}

TransformResult finish(const Graph& g, Graph result, const TransformKind& t) {
  MoveRecord rec;
  rec.before = space_point(g);
  if (recognize(g)) {
    try {
      rec.predicted = predict_move(g, t);
    } catch (const UncoveredTransform&) {
      rec.predicted.reset();
    }
  }
  rec.actual = space_point(result);
  rec.preserved = is_upper_critical_def(result);
  return {std::move(result), rec};
}

std::uint64_t triangle_code(const Graph& g) {
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) code |= std::uint64_t{1} << (e.u * g.order() + e.v);
  return code;
}

class CriticalSearch {
 public:
  explicit CriticalSearch(int m) : m_(m) {}

  bool run(const Graph& g, int chroma, int depth) {
    if (depth == m_) return is_upper_critical_def(g);
    const std::uint64_t key = triangle_code(g);
    if (dead_.contains(key)) return false;
    for (const Edge& e : g.edges()) {
      Graph h = g.without_edge(e.u, e.v);
      if (chromatic_number(h) != chroma - 1) continue;
      removed_.push_back(e);
      if (run(h, chroma - 1, depth + 1)) {
        if (!result_) result_ = std::move(h);
        return true;
      }
      removed_.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::vector<Edge> removed_;
  std::optional<Graph> result_;

 private:
  int m_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

SpacePoint space_point(const Graph& g) { return {g.order(), chromatic_number(g)}; }

std::string describe(const TransformKind& t) {
  return std::visit(
      overloaded{
          [](const transform::DeleteVertex& d) { return "delete_vertex x=" + std::to_string(d.x); },
          [](const transform::IdentifyVertices& d) {
            return "identify_vertices x=" + std::to_string(d.x) + " y=" + std::to_string(d.y);
          },
          [](const transform::ContractEdge& d) {
            return "contract_edge x=" + std::to_string(d.x) + " y=" + std::to_string(d.y);
          },
          [](const transform::AddCopy& d) { return "add_copy x=" + std::to_string(d.x); },
          [](const transform::AddCompleteVertex&) { return std::string("add_complete_vertex"); },
          [](const transform::AddEdge& d) { return "add_edge x=" + std::to_string(d.x) + " y=" + std::to_string(d.y); },
          [](const transform::RemoveCriticalEdges& d) { return "remove_critical_edges m=" + std::to_string(d.m); },
      },
      t);
}

std::string AddEdgeConditions::to_string() const {
  return "cond1_strict=" + bool_str(cond1_strict) + " cond1_loose=" + bool_str(cond1_loose) +
         " cond2=" + bool_str(cond2) + " |N[x]|=" + std::to_string(closed_neighborhood_size) +
         " N[x]_complete=" + bool_str(closed_neighborhood_complete) +
         " complement_edges=" + std::to_string(complement_edges) + " order=" + std::to_string(order) +
         " chi=" + std::to_string(chroma);
}

SpacePoint predict_move(const Graph& g, const TransformKind& t, CopyReading reading) {
  const auto sig = recognize(g);
  if (!sig) throw std::invalid_argument("predict_move requires an upper-critical graph");
  const int n = g.order();
  const int k = sig->chroma();
  return std::visit(
      overloaded{
          [&](const transform::DeleteVertex& d) -> SpacePoint {
            g.check_vertex(d.x);
            return is_complete_vertex(g, d.x) ? SpacePoint{n - 1, k - 1} : SpacePoint{n - 1, k};
          },
          [&](const transform::IdentifyVertices& d) -> SpacePoint {
            require_distinct_nonadjacent(g, d.x, d.y);
            return {n - 1, k};
          },
          [&](const transform::ContractEdge& d) -> SpacePoint {
            require_edge(g, d.x, d.y);
            const int non_complete = static_cast<int>(!is_complete_vertex(g, d.x)) +
                                     static_cast<int>(!is_complete_vertex(g, d.y));
            if (non_complete == 0) return {n - 1, k - 1};
            if (non_complete == 1) return {n - 1, k};
            return {n - 1, k + 1};
          },
          [&](const transform::AddCopy& d) -> SpacePoint {
            g.check_vertex(d.x);
            if (is_complete_vertex(g, d.x) && reading == CopyReading::NonCompleteOnly) {
              throw UncoveredTransform("copies of complete vertices are not covered");
            }
            return {n + 1, k};
          },
          [&](const transform::AddCompleteVertex&) -> SpacePoint { return {n + 1, k + 1}; },
          [&](const transform::AddEdge& d) -> SpacePoint {
            require_distinct_nonadjacent(g, d.x, d.y);
            const AddEdgeConditions c = evaluate_add_edge_conditions(g, d.x, d.y);
            if (!c.cond1_strict && !c.cond2) throw UncoveredTransform("neither add-edge condition holds");
            return {n, k + 1};
          },
          [&](const transform::RemoveCriticalEdges& d) -> SpacePoint {
            if (!g.is_complete() || n < 2) throw UncoveredTransform("critical edge removal starts from K_k, k >= 2");
            if (d.m < 0 || d.m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
            return {n, k - d.m};
          },
      },
      t);
}

Graph merge_vertices(const Graph& g, VertexId x, VertexId y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("cannot merge a vertex with itself");
  const VertexId lo = std::min(x, y);
  const VertexId hi = std::max(x, y);
  const VertexSet merged = (g.neighbors(x) | g.neighbors(y)) - VertexSet::singleton(x) - VertexSet::singleton(y);
  std::vector<std::uint64_t> rows;
  for (VertexId v = 0; v < g.order(); ++v) {
    VertexSet row = g.neighbors(v) - VertexSet::singleton(x) - VertexSet::singleton(y);
    if (v == hi) {
      row = VertexSet{};
    } else if (v == lo) {
      row = merged;
    } else if (merged.contains(v)) {
      row.insert(lo);
    }
    rows.push_back(row.bits());
  }
  return Graph::from_rows(rows).without_vertex(hi);
}

TransformResult delete_vertex(const Graph& g, VertexId x) {
  g.check_vertex(x);
  return finish(g, g.without_vertex(x), transform::DeleteVertex{x});
}

TransformResult identify_vertices(const Graph& g, VertexId x, VertexId y) {
  require_distinct_nonadjacent(g, x, y);
  return finish(g, merge_vertices(g, x, y), transform::IdentifyVertices{x, y});
}

TransformResult contract_edge(const Graph& g, VertexId x, VertexId y) {
  require_edge(g, x, y);
  return finish(g, merge_vertices(g, x, y), transform::ContractEdge{x, y});
}

TransformResult add_copy(const Graph& g, VertexId x) {
  g.check_vertex(x);
  return finish(g, g.with_vertex(g.neighbors(x)), transform::AddCopy{x});
}

TransformResult add_complete_vertex(const Graph& g) {
  return finish(g, g.with_vertex(g.vertices()), transform::AddCompleteVertex{});
}

AddEdgeConditions evaluate_add_edge_conditions(const Graph& g, VertexId x, VertexId y) {
  require_distinct_nonadjacent(g, x, y);
  AddEdgeConditions c;
  const VertexSet closed = neighborhood(g, x, /*closed=*/true);
  c.closed_neighborhood_complete = g.induced(closed).is_complete();
  c.closed_neighborhood_size = closed.size();
  c.order = g.order();
  c.chroma = chromatic_number(g);
  c.complement_edges = c.order * (c.order - 1) / 2 - g.edge_count();
  c.cond1_strict = !(c.closed_neighborhood_complete && c.closed_neighborhood_size == c.chroma);
  c.cond1_loose = !c.closed_neighborhood_complete;
  c.cond2 = c.complement_edges <= c.order - c.chroma;
  return c;
}

TransformResult add_edge_with_conditions(const Graph& g, VertexId x, VertexId y) {
  const AddEdgeConditions c = evaluate_add_edge_conditions(g, x, y);
  TransformResult r = finish(g, g.with_edge(x, y), transform::AddEdge{x, y});
  r.record.conditions = c;
  return r;
}

std::optional<CriticalSequence> critical_sequence_search(int k, int m) {
  if (k < 2 || k > kCriticalSearchBound) {
    throw std::out_of_range("critical sequence search supports 2 <= k <= " + std::to_string(kCriticalSearchBound));
  }
  if (m < 0 || m > k * (k - 1) / 2) throw std::out_of_range("m must lie in [0, C(k,2)]");
  const Graph start = Graph::complete(k);
  CriticalSearch search(m);
  if (!search.run(start, k, 0)) return std::nullopt;
  return CriticalSequence{search.removed_, search.result_.value_or(start)};
}

TransformResult apply_transform(const Graph& g, const TransformKind& t) {
  return std::visit(
      overloaded{
          [&](const transform::DeleteVertex& d) { return delete_vertex(g, d.x); },
          [&](const transform::IdentifyVertices& d) { return identify_vertices(g, d.x, d.y); },
          [&](const transform::ContractEdge& d) { return contract_edge(g, d.x, d.y); },
          [&](const transform::AddCopy& d) { return add_copy(g, d.x); },
          [&](const transform::AddCompleteVertex&) { return add_complete_vertex(g); },
          [&](const transform::AddEdge& d) { return add_edge_with_conditions(g, d.x, d.y); },
          [&](const transform::RemoveCriticalEdges& d) {
            if (!g.is_complete()) throw std::invalid_argument("critical edge removal starts from a complete graph");
            auto seq = critical_sequence_search(g.order(), d.m);
            if (!seq) throw std::runtime_error("no critical edge sequence of length " + std::to_string(d.m));
            return finish(g, seq->result, d);
          },
      },
      t);
}

}  // namespace ucg
