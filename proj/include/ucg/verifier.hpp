#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucg/graph.hpp"
#include "ucg/transforms.hpp"

namespace ucg {

enum class TheoremId {
  UniqueColoring,
  Neighborhood,
  CliqueContain,
  CopyPair,
  AddCopy,
  DeleteVertex,
  Identify,
  Contract,
  AddEdgeConds,
  CriticalSequence,
  KpartiteEquiv,
  TableTravel,
};

inline constexpr std::array kAllTheorems{
    TheoremId::UniqueColoring, TheoremId::Neighborhood,     TheoremId::CliqueContain, TheoremId::CopyPair,
    TheoremId::AddCopy,        TheoremId::DeleteVertex,     TheoremId::Identify,      TheoremId::Contract,
    TheoremId::AddEdgeConds,   TheoremId::CriticalSequence, TheoremId::KpartiteEquiv, TheoremId::TableTravel,
};

/// "UNIQUE_COLORING", "TABLE_TRAVEL", ...
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

/// Largest order of the all-labeled-graphs scans (2^21 graphs at 7).
inline constexpr int kLabeledBound = 7;
/// Largest order of the signature-indexed scans.
inline constexpr int kSignatureBound = 12;
/// Witnesses kept per report; failures beyond the cap are still counted.
inline constexpr std::size_t kWitnessCap = 16;

struct SearchBound {
  /// Labeled graphs on 1..max_n vertices; also the signature range of the add-edge probe.
  int max_n = 6;
  /// Signatures with order 1..signature_max_n.
  int signature_max_n = 8;
  /// Drop disconnected graphs (the one-part signatures {N}, N >= 2).
  bool connected_only = false;

  void validate() const;
};

/// One failing case. `probe` and `operands` are enough to replay it.
struct Witness {
  Graph graph;
  std::string probe;
  std::vector<int> operands;
  std::string expected;
  std::string observed;

  std::string detail() const;
};

enum class Status { Verified, Falsified };

struct TheoremReport {
  TheoremId theorem = TheoremId::UniqueColoring;
  SearchBound bound;
  std::uint64_t cases_checked = 0;
  std::uint64_t failures = 0;
  Status status = Status::Verified;
  std::vector<Witness> witnesses;
  /// Informational findings that do not affect the status.
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
  SearchBound bound;
  /// Predictor checked by TABLE_TRAVEL; swap in a broken one to test the harness.
  Predictor predictor = [](const Graph& g, const TransformKind& t, CopyReading r) { return predict_move(g, t, r); };
  /// Worker threads for labeled scans; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// All labeled graphs on n vertices in edge-bitmask order: bit i of the mask is
/// the i-th pair of (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::vector<Graph> enumerate_graphs(int n, bool connected_only);
/// Streams the graphs whose masks lie in [first_mask, last_mask).
void for_each_labeled_graph(int n, bool connected_only, std::uint64_t first_mask, std::uint64_t last_mask,
                            const std::function<void(const Graph&)>& visit);
std::uint64_t labeled_graph_count(int n, bool connected_only);
std::uint64_t bell_number(int n);

/// Case count a complete run over `bound` must reach, derived from counting formulas.
std::uint64_t expected_cases(TheoremId id, const SearchBound& bound);

TheoremReport verify_theorem(TheoremId id, const VerifyOptions& options = {});
std::vector<TheoremReport> verify_all(const VerifyOptions& options = {});

/// Re-runs the single case a witness describes; true iff it still fails.
bool replay_witness(const Witness& witness, const VerifyOptions& options = {});

/// Predictor whose chromatic coordinate is one too high.
Predictor corrupted_predictor();

nlohmann::json to_json(const TheoremReport& report);
/// Stable one-line summary without timing.
std::string summary_line(const TheoremReport& report);

}  // namespace ucg
