// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ucg/cli.hpp"
#include "ucg/coloring.hpp"
#include "ucg/enumeration.hpp"
#include "ucg/transforms.hpp"
#include "ucg/upper_critical.hpp"
#include "ucg/verifier.hpp"

using namespace ucg;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Verdict()> body;
};

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("elapsed_ms");
  return j;
}

std::vector<Graph> signature_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : enumerate_upper_critical(n)) out.push_back(g);
  return out;
}

Verdict table_reproduction() {
  Verdict v;
  std::ostringstream out, err;
  if (cli::run({"table", "--max-n", "5"}, out, err) != 0) v.fail("table command failed: " + err.str());
  const std::string expected =
      "N\\k | 1   | 2            | 3                | 4         | 5\n"
      "1   | K_1 |              |                  |           |\n"
      "2   |     | K_2          |                  |           |\n"
      "3   |     | {1,2}        | K_3              |           |\n"
      "4   |     | {1,3}, {2,2} | {1,1,2}          | K_4       |\n"
      "5   |     | {1,4}, {2,3} | {1,1,3}, {1,2,2} | {1,1,1,2} | K_5\n";
  if (out.str() != expected) v.fail("table text differs:\n" + out.str());
  v.detail = v.ok ? "rows 1-5 match cell for cell" : v.detail;
  return v;
}

Verdict counting_consistency() {
  Verdict v;
  int pairs = 0;
  for (int n = 0; n <= 25; ++n)
    for (int k = 0; k <= n; ++k) {
      ++pairs;
      const std::uint64_t c = count_partitions(n, k);
      const std::size_t listed = partitions_of(n, k).size();
      const std::size_t direct = oracle::partitions_of(n, k).size();
      if (c != listed && n > 0) v.fail("P(" + std::to_string(n) + "," + std::to_string(k) + ") != listing");
      if (c != direct) v.fail("P(" + std::to_string(n) + "," + std::to_string(k) + ") != direct generation");
    }
  if (v.ok) v.detail = std::to_string(pairs) + " (N,k) pairs agree";
  return v;
}

Verdict equivalence() {
  Verdict v;
  std::uint64_t graphs = 0, mismatches = 0, upper = 0;
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      ++graphs;
      const bool def = is_upper_critical_def(g);
      upper += def;
      if (def != recognize(g).has_value()) ++mismatches;
    }
  if (graphs != 1 + 1 + 2 + 8 + 64 + 1024 + 32768) v.fail("wrong number of graphs scanned");
  if (mismatches) v.fail(std::to_string(mismatches) + " mismatches");
  if (v.ok) v.detail = std::to_string(graphs) + " labeled graphs, " + std::to_string(upper) + " upper-critical, 0 mismatches";
  return v;
}

Verdict closure() {
  Verdict v;
  std::uint64_t cases = 0, failures = 0;
  auto record = [&](const TransformResult& r) {
    ++cases;
    if (!is_upper_critical_def(r.graph)) ++failures;
  };
  for (const Graph& g : signature_graphs(8)) {
    const int n = g.order();
    record(add_complete_vertex(g));
    for (int x = 0; x < n; ++x) {
      record(delete_vertex(g, x));
      record(add_copy(g, x));
      for (int y = x + 1; y < n; ++y) record(g.adjacent(x, y) ? contract_edge(g, x, y) : identify_vertices(g, x, y));
    }
  }
  if (failures) v.fail(std::to_string(failures) + " of " + std::to_string(cases) + " results not upper-critical");
  if (v.ok) v.detail = std::to_string(cases) + " transformed graphs, all upper-critical";
  return v;
}

Verdict table_travel() {
  Verdict v;
  std::uint64_t cases = 0, disagreements = 0;
  auto compare = [&](const Graph& g, const TransformKind& t, const Graph& result) {
    ++cases;
    const SpacePoint actual{result.order(), chromatic_number(result)};
    try {
      if (predict_move(g, t) != actual || !is_upper_critical_def(result)) ++disagreements;
    } catch (const UncoveredTransform&) {
      ++disagreements;
    }
  };
  for (const Graph& g : signature_graphs(8)) {
    const int n = g.order();
    compare(g, transform::AddCompleteVertex{}, add_complete_vertex(g).graph);
    for (int x = 0; x < n; ++x) {
      compare(g, transform::DeleteVertex{x}, delete_vertex(g, x).graph);
      for (int y = x + 1; y < n; ++y) {
        if (g.adjacent(x, y))
          compare(g, transform::ContractEdge{x, y}, contract_edge(g, x, y).graph);
        else
          compare(g, transform::IdentifyVertices{x, y}, identify_vertices(g, x, y).graph);
      }
    }
  }
  if (disagreements) v.fail(std::to_string(disagreements) + " of " + std::to_string(cases) + " moves mispredicted");

  const TheoremReport a = verify_theorem(TheoremId::TableTravel);
  const TheoremReport b = verify_theorem(TheoremId::TableTravel);
  if (without_timing(to_json(a)) != without_timing(to_json(b))) v.fail("report differs between runs");
  std::string reading;
  bool strict_noted = false, any_noted = false;
  for (const auto& note : a.notes) {
    strict_noted = strict_noted || note.rfind("item 1a, copy of a non-complete vertex", 0) == 0;
    any_noted = any_noted || note.rfind("item 1a, copy of any vertex", 0) == 0;
    if (note.rfind("item 1a: ", 0) == 0) reading = note.substr(9);
  }
  if (!strict_noted || !any_noted || reading.empty()) v.fail("report does not state both item 1a readings");
  if ((a.status == Status::Falsified) != !a.witnesses.empty()) v.fail("status and witnesses disagree");
  for (const Witness& w : a.witnesses)
    if (!replay_witness(w)) v.fail("witness does not replay: " + w.detail());
  if (v.ok) v.detail = std::to_string(cases) + " moves agree; item 1a: " + reading + "; deterministic report";
  return v;
}

Verdict falsifiability() {
  Verdict v;
  std::uint64_t cases = 0, failures = 0, probe = 0;
  const PartitionSignature three_three({3, 3});
  for (int n = 1; n <= 6; ++n)
    for (const PartitionSignature& s : upper_critical_signatures(n)) {
      const Graph g = construct(s);
      for (const Edge& e : g.non_edges()) {
        ++cases;
        probe += s == three_three;
        const AddEdgeConditions c = evaluate_add_edge_conditions(g, e.u, e.v);
        const bool claimed = c.cond1_strict || c.cond1_loose || c.cond2;
        if (claimed && !oracle::upper_critical(oracle::plus_edge(g, e.u, e.v))) ++failures;
      }
    }
  const TheoremReport r = verify_theorem(TheoremId::AddEdgeConds);
  if (r.cases_checked != cases) v.fail("cases_checked " + std::to_string(r.cases_checked) + " != " + std::to_string(cases));
  if (probe == 0) v.fail("{3,3} same-class pair not in range");
  if (r.failures != failures) v.fail("failure count differs from the oracle recount");
  const Status expected = failures ? Status::Falsified : Status::Verified;
  if (r.status != expected) v.fail("status differs from the oracle recount");
  for (const Witness& w : r.witnesses)
    if (!replay_witness(w)) v.fail("witness does not replay: " + w.detail());

  VerifyOptions corrupt;
  corrupt.predictor = corrupted_predictor();
  const TheoremReport self = verify_theorem(TheoremId::TableTravel, corrupt);
  if (self.status != Status::Falsified || self.witnesses.empty()) v.fail("corrupted predictor not detected");

  if (v.ok)
    v.detail = std::string("ADD_EDGE_CONDS ") + (r.status == Status::Falsified ? "FALSIFIED" : "VERIFIED") + " on " +
               std::to_string(cases) + " cases (" + std::to_string(probe) + " from {3,3}), " +
               std::to_string(r.witnesses.size()) + " witnesses replay; self-test FALSIFIED with " +
               std::to_string(self.witnesses.size()) + " witnesses";
  return v;
}

Verdict unique_colorability() {
  Verdict v;
  std::uint64_t graphs = 0;
  for (const Graph& g : signature_graphs(8)) {
    ++graphs;
    const int chi = chromatic_number(g);
    if (count_proper_partitions(g, chi) != 1) v.fail("not uniquely colorable: order " + std::to_string(g.order()));
    if (!contains_clique(g, chi)) v.fail("no clique of size chi: order " + std::to_string(g.order()));
    if (g.order() <= 6 && oracle::partitions(g, chi).size() != 1) v.fail("labeling oracle disagrees");
  }
  if (v.ok) v.detail = std::to_string(graphs) + " graphs, each with one chi-partition and a chi-clique";
  return v;
}

Verdict chromatic_sanity() {
  Verdict v;
  std::uint64_t sigs = 0, graphs = 0;
  for (int n = 1; n <= 10; ++n)
    for (const PartitionSignature& s : upper_critical_signatures(n)) {
      ++sigs;
      if (chromatic_number(construct(s)) != s.chroma()) v.fail("chi of " + s.to_set_notation());
    }
  for (int n = 0; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) {
      ++graphs;
      if (chromatic_number(g) != oracle::chromatic(g)) v.fail("chi differs from labeling oracle");
    }
  if (v.ok) v.detail = std::to_string(sigs) + " signatures, " + std::to_string(graphs) + " graphs agree";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 1.0, table_reproduction},
      {2, "counting consistency", 5.0, counting_consistency},
      {3, "equivalence on all graphs up to 6 vertices", 60.0, equivalence},
      {4, "closure of the five transformations", 120.0, closure},
      {5, "table-travel agreement", 120.0, table_travel},
      {6, "falsifiability contract", 120.0, falsifiability},
      {7, "unique colorability and clique containment", 120.0, unique_colorability},
      {8, "chromatic oracle sanity", 120.0, chromatic_sanity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    failed += !v.ok;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.title, v.ok ? "PASS" : "FAIL", secs, v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
