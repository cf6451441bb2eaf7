#include "ucg/verifier.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ucg/coloring.hpp"
#include "ucg/enumeration.hpp"
#include "ucg/io.hpp"
#include "ucg/upper_critical.hpp"

namespace ucg {

namespace {

constexpr std::array<std::string_view, kAllTheorems.size()> kNames{
    "UNIQUE_COLORING", "NEIGHBORHOOD",      "CLIQUE_CONTAIN", "COPY_PAIR",
    "ADD_COPY",        "DELETE_VERTEX",     "IDENTIFY",       "CONTRACT",
    "ADD_EDGE_CONDS",  "CRITICAL_SEQUENCE", "KPARTITE_EQUIV", "TABLE_TRAVEL",
};

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::string point_str(const SpacePoint& p) { return p.to_string(); }

// ---------------------------------------------------------------------------
// Probes: each evaluates one case and describes the failure, if any.

struct Failure {
  std::string expected;
  std::string observed;
};

using ProbeResult = std::optional<Failure>;
using Probe = ProbeResult (*)(const Graph&, std::span<const int>, const VerifyOptions&);

ProbeResult probe_unique_coloring(const Graph& g, std::span<const int>, const VerifyOptions&) {
  const int k = chromatic_number(g);
  const long long count = count_proper_partitions(g, k);
  if (count == 1) return std::nullopt;
  return Failure{"exactly 1 partition into " + std::to_string(k) + " classes", std::to_string(count) + " partitions"};
}

ProbeResult probe_neighborhood(const Graph& g, std::span<const int>, const VerifyOptions&) {
  if (neighborhood_structure_holds(g)) return std::nullopt;
  return Failure{"N(x) = vertices outside x's class, for every x", "some N(x) differs"};
}

ProbeResult probe_clique_contain(const Graph& g, std::span<const int>, const VerifyOptions&) {
  const int k = chromatic_number(g);
  if (contains_clique(g, std::max(k, 1))) return std::nullopt;
  return Failure{"clique of size " + std::to_string(k), "largest clique " + std::to_string(max_clique_size(g))};
}

ProbeResult probe_copy_pair(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  if (neighborhood(g, op[0]) == neighborhood(g, op[1])) return std::nullopt;
  return Failure{"N(x) = N(y)", "neighborhoods differ"};
}

ProbeResult closure_verdict(const TransformResult& r) {
  if (r.record.preserved) return std::nullopt;
  return Failure{"upper-critical result", "result " + io::to_graph6(r.graph) + " is not upper-critical"};
}

ProbeResult probe_add_copy(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  return closure_verdict(add_copy(g, op[0]));
}
ProbeResult probe_add_complete_vertex(const Graph& g, std::span<const int>, const VerifyOptions&) {
  return closure_verdict(add_complete_vertex(g));
}
ProbeResult probe_delete_vertex(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  return closure_verdict(delete_vertex(g, op[0]));
}
ProbeResult probe_identify(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  return closure_verdict(identify_vertices(g, op[0], op[1]));
}
ProbeResult probe_contract(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  return closure_verdict(contract_edge(g, op[0], op[1]));
}

ProbeResult probe_add_edge_conds(const Graph& g, std::span<const int> op, const VerifyOptions&) {
  const AddEdgeConditions c = evaluate_add_edge_conditions(g, op[0], op[1]);
  const bool preserved = is_upper_critical_def(g.with_edge(op[0], op[1]));
  if (preserved || !(c.cond1_strict || c.cond1_loose || c.cond2)) return std::nullopt;
  std::string claimed;
  if (c.cond1_strict) claimed += " cond1_strict";
  if (c.cond1_loose) claimed += " cond1_loose";
  if (c.cond2) claimed += " cond2";
  return Failure{"g+xy upper-critical (claimed by" + claimed + ")", "g+xy not upper-critical; " + c.to_string()};
}

ProbeResult probe_critical_sequence(const Graph&, std::span<const int> op, const VerifyOptions&) {
  if (critical_sequence_search(op[0], op[1])) return std::nullopt;
  return Failure{"sequence of " + std::to_string(op[1]) + " critical edges from K_" + std::to_string(op[0]) +
                     " ending upper-critical",
                 "no such sequence"};
}

ProbeResult probe_kpartite_equiv(const Graph& g, std::span<const int>, const VerifyOptions&) {
  const bool by_definition = is_upper_critical_def(g);
  const bool by_structure = recognize(g).has_value();
  if (by_definition == by_structure) return std::nullopt;
  return Failure{std::string("complete multipartite = ") + (by_definition ? "true" : "false"),
                 std::string("complete multipartite = ") + (by_structure ? "true" : "false")};
}

ProbeResult travel(const Graph& g, const TransformKind& t, CopyReading reading, const VerifyOptions& options) {
  const TransformResult r = apply_transform(g, t);
  std::optional<SpacePoint> predicted;
  try {
    predicted = options.predictor(g, t, reading);
  } catch (const UncoveredTransform&) {
    predicted.reset();
  }
  if (predicted && *predicted == r.record.actual && r.record.preserved) return std::nullopt;
  return Failure{"upper-critical at " + (predicted ? point_str(*predicted) : std::string("(uncovered)")),
                 point_str(r.record.actual) + (r.record.preserved ? " upper-critical" : " not upper-critical")};
}

ProbeResult probe_travel_1a_strict(const Graph& g, std::span<const int> op, const VerifyOptions& o) {
  return travel(g, transform::AddCopy{op[0]}, CopyReading::NonCompleteOnly, o);
}
ProbeResult probe_travel_1a_any(const Graph& g, std::span<const int> op, const VerifyOptions& o) {
  return travel(g, transform::AddCopy{op[0]}, CopyReading::AnyVertex, o);
}
ProbeResult probe_travel_1b(const Graph& g, std::span<const int>, const VerifyOptions& o) {
  return travel(g, transform::AddCompleteVertex{}, CopyReading::NonCompleteOnly, o);
}
ProbeResult probe_travel_2(const Graph& g, std::span<const int> op, const VerifyOptions& o) {
  return travel(g, transform::DeleteVertex{op[0]}, CopyReading::NonCompleteOnly, o);
}
ProbeResult probe_travel_3(const Graph& g, std::span<const int> op, const VerifyOptions& o) {
  return travel(g, transform::IdentifyVertices{op[0], op[1]}, CopyReading::NonCompleteOnly, o);
}
ProbeResult probe_travel_4(const Graph& g, std::span<const int> op, const VerifyOptions& o) {
  return travel(g, transform::ContractEdge{op[0], op[1]}, CopyReading::NonCompleteOnly, o);
}

const std::map<std::string, Probe, std::less<>>& probe_registry() {
  static const std::map<std::string, Probe, std::less<>> registry{
      {"unique_coloring", probe_unique_coloring},
      {"neighborhood", probe_neighborhood},
      {"clique_contain", probe_clique_contain},
      {"copy_pair", probe_copy_pair},
      {"add_copy", probe_add_copy},
      {"add_complete_vertex", probe_add_complete_vertex},
      {"delete_vertex", probe_delete_vertex},
      {"identify_vertices", probe_identify},
      {"contract_edge", probe_contract},
      {"add_edge_conds", probe_add_edge_conds},
      {"critical_sequence", probe_critical_sequence},
      {"kpartite_equiv", probe_kpartite_equiv},
      {"travel_1a_strict", probe_travel_1a_strict},
      {"travel_1a_any", probe_travel_1a_any},
      {"travel_1b", probe_travel_1b},
      {"travel_2", probe_travel_2},
      {"travel_3", probe_travel_3},
      {"travel_4", probe_travel_4},
  };
  return registry;
}

// ---------------------------------------------------------------------------
// Tallies: per-shard results, merged in shard order.

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, std::uint64_t> counters;

  /// Runs one probe; returns true when the case fails.
  bool check(const Graph& g, std::string_view probe, std::vector<int> operands, const VerifyOptions& options) {
    ++cases;
    const auto it = probe_registry().find(probe);
    if (it == probe_registry().end()) throw std::logic_error("unknown probe " + std::string(probe));
    ProbeResult fail = it->second(g, operands, options);
    if (!fail) return false;
    ++failures;
    if (witnesses.size() < kWitnessCap) {
      witnesses.push_back({g, std::string(probe), std::move(operands), std::move(fail->expected),
                           std::move(fail->observed)});
    }
    return true;
  }

  void count(const std::string& key, std::uint64_t by = 1) { counters[key] += by; }

  void merge(Tally&& other) {
    cases += other.cases;
    failures += other.failures;
    for (auto& w : other.witnesses) {
      if (witnesses.size() >= kWitnessCap) break;
      witnesses.push_back(std::move(w));
    }
    for (const auto& [key, value] : other.counters) counters[key] += value;
  }

  std::uint64_t get(const std::string& key) const {
    const auto it = counters.find(key);
    return it == counters.end() ? 0 : it->second;
  }
};

using LabeledBody = std::function<void(const Graph&, Tally&)>;

Tally scan_labeled(const VerifyOptions& options, const LabeledBody& body) {
  const SearchBound& b = options.bound;
  unsigned workers = options.workers ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  Tally total;
  for (int n = 1; n <= b.max_n; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << choose2(static_cast<std::uint64_t>(n));
    // Shards are contiguous mask ranges; small orders are not worth splitting.
    const std::uint64_t shards = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, masks / 4096));
    std::vector<std::future<Tally>> parts;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t lo = masks * s / shards;
      const std::uint64_t hi = masks * (s + 1) / shards;
      parts.push_back(std::async(shards == 1 ? std::launch::deferred : std::launch::async, [&, n, lo, hi] {
        Tally t;
        for_each_labeled_graph(n, b.connected_only, lo, hi, [&](const Graph& g) { body(g, t); });
        return t;
      }));
    }
    for (auto& p : parts) total.merge(p.get());
  }
  return total;
}

template <typename Body>
void scan_signatures(int max_order, bool connected_only, Body&& body) {
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& s : upper_critical_signatures(n, std::nullopt, connected_only)) body(s, construct(s));
  }
}

std::vector<std::pair<VertexId, VertexId>> nonadjacent_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.non_edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::string fmt_count(std::uint64_t part, std::uint64_t whole) {
  return std::to_string(part) + " of " + std::to_string(whole);
}

// ---------------------------------------------------------------------------
// Theorem runners.

Tally run_structural(TheoremId id, const VerifyOptions& options) {
  const auto per_graph = [id, &options](const Graph& g, Tally& t) {
    switch (id) {
      case TheoremId::UniqueColoring:
        t.check(g, "unique_coloring", {}, options);
        break;
      case TheoremId::Neighborhood:
        t.check(g, "neighborhood", {}, options);
        if (!literal_neighborhood_formula_holds(g)) t.count("literal_fail");
        break;
      case TheoremId::CliqueContain:
        t.check(g, "clique_contain", {}, options);
        break;
      default:
        for (auto [x, y] : nonadjacent_pairs(g)) t.check(g, "copy_pair", {x, y}, options);
        break;
    }
  };
  Tally t = scan_labeled(options, [&](const Graph& g, Tally& shard) {
    if (is_upper_critical_def(g)) per_graph(g, shard);
  });
  scan_signatures(options.bound.signature_max_n, options.bound.connected_only,
                  [&](const PartitionSignature&, const Graph& g) { per_graph(g, t); });
  return t;
}

Tally run_closure(TheoremId id, const VerifyOptions& options) {
  Tally t;
  scan_signatures(options.bound.signature_max_n, options.bound.connected_only,
                  [&](const PartitionSignature&, const Graph& g) {
                    switch (id) {
                      case TheoremId::AddCopy:
                        for (VertexId x = 0; x < g.order(); ++x) t.check(g, "add_copy", {x}, options);
                        t.check(g, "add_complete_vertex", {}, options);
                        break;
                      case TheoremId::DeleteVertex:
                        for (VertexId x = 0; x < g.order(); ++x) t.check(g, "delete_vertex", {x}, options);
                        break;
                      case TheoremId::Identify:
                        for (auto [x, y] : nonadjacent_pairs(g)) t.check(g, "identify_vertices", {x, y}, options);
                        break;
                      default:
                        for (const Edge& e : g.edges()) t.check(g, "contract_edge", {e.u, e.v}, options);
                        break;
                    }
                  });
  return t;
}

Tally run_add_edge(const VerifyOptions& options) {
  Tally t;
  scan_signatures(options.bound.max_n, options.bound.connected_only, [&](const PartitionSignature& s, const Graph& g) {
    for (auto [x, y] : nonadjacent_pairs(g)) {
      const AddEdgeConditions c = evaluate_add_edge_conditions(g, x, y);
      t.check(g, "add_edge_conds", {x, y}, options);
      const bool preserved = is_upper_critical_def(g.with_edge(x, y));
      if (preserved) t.count("preserved");
      for (const auto& [name, holds] : {std::pair{"cond1_strict", c.cond1_strict},
                                        std::pair{"cond1_loose", c.cond1_loose}, std::pair{"cond2", c.cond2}}) {
        if (!holds) continue;
        t.count(std::string(name) + "_claimed");
        if (!preserved) t.count(std::string(name) + "_wrong");
      }
      if (s.parts() == std::vector<int>{3, 3}) t.count("probe_3_3");
    }
  });
  return t;
}

Tally run_critical_sequence(const VerifyOptions& options, std::vector<std::string>& notes) {
  Tally t;
  const int max_k = std::min(options.bound.signature_max_n, kCriticalSearchBound);
  for (int k = 2; k <= max_k; ++k) {
    t.check(Graph::complete(k), "critical_sequence", {k, k - 2}, options);
    std::string feasible;
    for (int m = 0; m < k; ++m) {
      if (critical_sequence_search(k, m)) feasible += (feasible.empty() ? "" : ",") + std::to_string(m);
    }
    notes.push_back("K_" + std::to_string(k) + ": critical sequences ending upper-critical exist for m in {" +
                    feasible + "}; claimed m=" + std::to_string(k - 2));
  }
  return t;
}

Tally run_kpartite(const VerifyOptions& options) {
  return scan_labeled(options, [&](const Graph& g, Tally& t) {
    t.check(g, "kpartite_equiv", {}, options);
    if (recognize(g)) t.count("upper_critical");
  });
}

Tally run_table_travel(const VerifyOptions& options) {
  Tally t;
  scan_signatures(options.bound.signature_max_n, options.bound.connected_only,
                  [&](const PartitionSignature&, const Graph& g) {
                    const auto item = [&](const std::string& key, std::string_view probe, std::vector<int> ops) {
                      t.count(key + "_cases");
                      if (t.check(g, probe, std::move(ops), options)) t.count(key + "_fail");
                    };
                    for (VertexId x = 0; x < g.order(); ++x) {
                      if (!is_complete_vertex(g, x)) item("1a_strict", "travel_1a_strict", {x});
                      item("1a_any", "travel_1a_any", {x});
                    }
                    item("1b", "travel_1b", {});
                    for (VertexId x = 0; x < g.order(); ++x) item("2", "travel_2", {x});
                    for (auto [x, y] : nonadjacent_pairs(g)) item("3", "travel_3", {x, y});
                    for (const Edge& e : g.edges()) {
                      const int non_complete = static_cast<int>(!is_complete_vertex(g, e.u)) +
                                               static_cast<int>(!is_complete_vertex(g, e.v));
                      item(std::string("4") + "abc"[non_complete], "travel_4", {e.u, e.v});
                    }
                  });
  return t;
}

void add_notes(TheoremId id, const Tally& t, std::vector<std::string>& notes) {
  switch (id) {
    case TheoremId::Neighborhood: {
      const Graph square = construct(PartitionSignature({2, 2}));
      notes.push_back("literal formula N(x) = V - {y | c(x) != c(y)} fails on " +
                      fmt_count(t.get("literal_fail"), t.cases) + " upper-critical graphs; on K_{2,2}: " +
                      (literal_neighborhood_formula_holds(square) ? "holds" : "fails"));
      notes.push_back("checked reading: N(x) = vertices outside the class of x");
      break;
    }
    case TheoremId::AddEdgeConds:
      notes.push_back("result upper-critical in " + fmt_count(t.get("preserved"), t.cases) + " cases");
      for (const char* c : {"cond1_strict", "cond1_loose", "cond2"}) {
        const std::string key(c);
        notes.push_back(key + " holds in " + std::to_string(t.get(key + "_claimed")) + " cases, result not " +
                        "upper-critical in " + std::to_string(t.get(key + "_wrong")) + " of them");
      }
      notes.push_back("same-class non-edges of {3,3} checked: " + std::to_string(t.get("probe_3_3")));
      break;
    case TheoremId::KpartiteEquiv:
      notes.push_back("complete multipartite labeled graphs: " + fmt_count(t.get("upper_critical"), t.cases));
      break;
    case TheoremId::TableTravel: {
      const auto item_note = [&](const std::string& key, const std::string& label) {
        const std::uint64_t fails = t.get(key + "_fail");
        notes.push_back(label + ": " + (fails ? "fails on " + fmt_count(fails, t.get(key + "_cases"))
                                              : "holds on all " + std::to_string(t.get(key + "_cases"))) +
                        " cases");
      };
      item_note("1a_strict", "item 1a, copy of a non-complete vertex");
      item_note("1a_any", "item 1a, copy of any vertex");
      item_note("1b", "item 1b, add a complete vertex");
      item_note("2", "item 2, delete a vertex");
      item_note("3", "item 3, identify non-adjacent vertices");
      item_note("4a", "item 4a, contract an edge between complete vertices");
      item_note("4b", "item 4b, contract an edge with one non-complete end");
      item_note("4c", "item 4c, contract an edge between non-complete vertices");
      const bool strict = t.get("1a_strict_fail") == 0;
      const bool any = t.get("1a_any_fail") == 0;
      notes.push_back(std::string("item 1a: ") + (strict && any ? "both readings hold"
                                                  : strict      ? "only the non-complete reading holds"
                                                  : any         ? "only the any-vertex reading holds"
                                                                : "neither reading holds"));
      break;
    }
    default:
      break;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view theorem_name(TheoremId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    if (theorem_name(id) == name) return id;
  }
  return std::nullopt;
}

void SearchBound::validate() const {
  if (max_n < 1 || max_n > kLabeledBound) {
    throw std::out_of_range("labeled bound must lie in [1, " + std::to_string(kLabeledBound) + "]");
  }
  if (signature_max_n < 1 || signature_max_n > kSignatureBound) {
    throw std::out_of_range("signature bound must lie in [1, " + std::to_string(kSignatureBound) + "]");
  }
}

std::string Witness::detail() const {
  std::string ops;
  for (std::size_t i = 0; i < operands.size(); ++i) ops += (i ? "," : "") + std::to_string(operands[i]);
  return probe + (ops.empty() ? "" : " [" + ops + "]") + ": expected " + expected + "; observed " + observed;
}

void for_each_labeled_graph(int n, bool connected_only, std::uint64_t first_mask, std::uint64_t last_mask,
                            const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > kLabeledBound) {
    throw std::out_of_range("labeled enumeration supports n <= " + std::to_string(kLabeledBound));
  }
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  last_mask = std::min(last_mask, std::uint64_t{1} << pairs.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (std::uint64_t mask = first_mask; mask < last_mask; ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        rows[static_cast<std::size_t>(pairs[i].u)] |= std::uint64_t{1} << pairs[i].v;
        rows[static_cast<std::size_t>(pairs[i].v)] |= std::uint64_t{1} << pairs[i].u;
      }
    }
    const Graph g = Graph::from_rows(rows);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, connected_only, 0, ~std::uint64_t{0}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t labeled_graph_count(int n, bool connected_only) {
  const auto all = [](int m) { return std::uint64_t{1} << choose2(static_cast<std::uint64_t>(m)); };
  if (!connected_only || n <= 1) return all(n);
  // c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) {
      binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  for (int m = 1; m <= n; ++m) {
    std::uint64_t disconnected = 0;
    for (int k = 1; k < m; ++k) {
      disconnected += binom[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] *
                      c[static_cast<std::size_t>(k)] * all(m - k);
    }
    c[static_cast<std::size_t>(m)] = all(m) - disconnected;
  }
  return c[static_cast<std::size_t>(n)];
}

std::uint64_t expected_cases(TheoremId id, const SearchBound& b) {
  const auto over_signatures = [&](int max_order, auto&& f) {
    std::uint64_t total = 0;
    for (int n = 1; n <= max_order; ++n) {
      for (const auto& s : upper_critical_signatures(n, std::nullopt, b.connected_only)) {
        std::uint64_t same_class_pairs = 0;
        std::uint64_t singletons = 0;
        for (int p : s.parts()) {
          same_class_pairs += choose2(static_cast<std::uint64_t>(p));
          singletons += p == 1 ? 1 : 0;
        }
        total += f(static_cast<std::uint64_t>(n), same_class_pairs, singletons);
      }
    }
    return total;
  };
  // Labeled complete multipartite graphs on n vertices correspond to set partitions.
  const auto labeled_uc = [&](auto&& per_n) {
    std::uint64_t total = 0;
    for (int n = 1; n <= b.max_n; ++n) total += per_n(n);
    return total;
  };
  const bool conn = b.connected_only;
  const int sig = b.signature_max_n;
  switch (id) {
    case TheoremId::UniqueColoring:
    case TheoremId::Neighborhood:
    case TheoremId::CliqueContain:
      return labeled_uc([&](int n) { return bell_number(n) - (conn && n >= 2 ? 1 : 0); }) +
             over_signatures(sig, [](auto, auto, auto) { return std::uint64_t{1}; });
    case TheoremId::CopyPair:
      // Pairs {x,y} sharing a class: glue x and y, then partition the n-1 remaining elements.
      return labeled_uc([&](int n) {
               const std::uint64_t pairs = choose2(static_cast<std::uint64_t>(n));
               return pairs * bell_number(n - 1) - (conn && n >= 2 ? pairs : 0);
             }) +
             over_signatures(sig, [](auto, auto same, auto) { return same; });
    case TheoremId::AddCopy:
      return over_signatures(sig, [](auto n, auto, auto) { return n + 1; });
    case TheoremId::DeleteVertex:
      return over_signatures(sig, [](auto n, auto, auto) { return n; });
    case TheoremId::Identify:
      return over_signatures(sig, [](auto, auto same, auto) { return same; });
    case TheoremId::Contract:
      return over_signatures(sig, [](auto n, auto same, auto) { return choose2(n) - same; });
    case TheoremId::AddEdgeConds:
      return over_signatures(b.max_n, [](auto, auto same, auto) { return same; });
    case TheoremId::CriticalSequence:
      return static_cast<std::uint64_t>(std::max(0, std::min(sig, kCriticalSearchBound) - 1));
    case TheoremId::KpartiteEquiv:
      return labeled_uc([&](int n) { return labeled_graph_count(n, conn); });
    case TheoremId::TableTravel:
      // 1a strict + 1a any + 1b + 2 + 3 + 4
      return over_signatures(sig, [](auto n, auto same, auto ones) {
        return (n - ones) + n + 1 + n + same + (choose2(n) - same);
      });
  }
  throw std::invalid_argument("unknown theorem");
}

TheoremReport verify_theorem(TheoremId id, const VerifyOptions& options) {
  options.bound.validate();
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.theorem = id;
  report.bound = options.bound;
  Tally t;
  switch (id) {
    case TheoremId::UniqueColoring:
    case TheoremId::Neighborhood:
    case TheoremId::CliqueContain:
    case TheoremId::CopyPair:
      t = run_structural(id, options);
      break;
    case TheoremId::AddCopy:
    case TheoremId::DeleteVertex:
    case TheoremId::Identify:
    case TheoremId::Contract:
      t = run_closure(id, options);
      break;
    case TheoremId::AddEdgeConds:
      t = run_add_edge(options);
      break;
    case TheoremId::CriticalSequence:
      t = run_critical_sequence(options, report.notes);
      break;
    case TheoremId::KpartiteEquiv:
      t = run_kpartite(options);
      break;
    case TheoremId::TableTravel:
      t = run_table_travel(options);
      break;
  }
  const std::uint64_t expected = expected_cases(id, options.bound);
  if (t.cases != expected) {
    throw std::logic_error(std::string(theorem_name(id)) + " checked " + std::to_string(t.cases) +
                           " cases, expected " + std::to_string(expected));
  }
  add_notes(id, t, report.notes);
  report.cases_checked = t.cases;
  report.failures = t.failures;
  report.witnesses = std::move(t.witnesses);
  report.status = t.failures > 0 ? Status::Falsified : Status::Verified;
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<TheoremReport> verify_all(const VerifyOptions& options) {
  std::vector<TheoremReport> out;
  for (TheoremId id : kAllTheorems) out.push_back(verify_theorem(id, options));
  return out;
}

bool replay_witness(const Witness& witness, const VerifyOptions& options) {
  const auto it = probe_registry().find(witness.probe);
  if (it == probe_registry().end()) throw std::invalid_argument("unknown probe " + witness.probe);
  return it->second(witness.graph, witness.operands, options).has_value();
}

Predictor corrupted_predictor() {
  return [](const Graph& g, const TransformKind& t, CopyReading r) {
    SpacePoint p = predict_move(g, t, r);
    ++p.chroma;
    return p;
  };
}

nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : report.witnesses) {
    witnesses.push_back({{"graph6", io::to_graph6(w.graph)}, {"detail", w.detail()}});
  }
  nlohmann::json j;
  j["theorem"] = theorem_name(report.theorem);
  j["max_n"] = report.bound.max_n;
  j["signature_max_n"] = report.bound.signature_max_n;
  j["connected_only"] = report.bound.connected_only;
  j["cases_checked"] = report.cases_checked;
  j["status"] = report.status == Status::Verified ? "verified" : "falsified";
  j["witnesses"] = std::move(witnesses);
  j["notes"] = report.notes;
  j["elapsed_ms"] = report.elapsed.count();
  return j;
}

std::string summary_line(const TheoremReport& report) {
  std::ostringstream out;
  out << theorem_name(report.theorem) << ' ' << (report.status == Status::Verified ? "verified" : "falsified")
      << " cases=" << report.cases_checked << " failures=" << report.failures
      << " witnesses=" << report.witnesses.size();
  return out.str();
}

}  // namespace ucg
