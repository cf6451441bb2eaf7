#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucg/graph.hpp"
#include "ucg/upper_critical.hpp"

namespace ucg {

inline constexpr int kMaxPartitionN = 60;

/// Memoised P(N, k): partitions of N into exactly k positive parts.
///
/// Filled bottom-up from P(N, k) = P(N-1, k-1) + P(N-k, k) with P(0,0) = 1,
/// P(N,0) = 0 for N > 0 and P(N,k) = 0 for k > N. Read-only after construction.
class PartitionCountTable {
 public:
  explicit PartitionCountTable(int max_n = kMaxPartitionN);

  int max_n() const { return max_n_; }
  std::uint64_t count(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<std::uint64_t>> memo_;
};

std::uint64_t count_partitions(int n, int k);
/// Total number of partitions of n.
std::uint64_t count_all_partitions(int n);

/// Signatures with k parts summing to n, lexicographically descending.
std::vector<PartitionSignature> partitions_of(int n, int k);

/// Signatures of order n, by ascending k, then as in partitions_of. With
/// connected_only, the one-part signature {n} is dropped for n >= 2.
std::vector<PartitionSignature> upper_critical_signatures(int n, std::optional<int> k = std::nullopt,
                                                          bool connected_only = false);
std::vector<Graph> enumerate_upper_critical(int n, std::optional<int> k = std::nullopt, bool connected_only = false);

/// Cells of the (order, chromatic number) table; cells[N-1][k-1] lists the
/// connected upper-critical graphs of order N and chromatic number k.
struct SignatureTable {
  int max_n = 0;
  std::vector<std::vector<std::vector<std::string>>> cells;
};

SignatureTable emit_table(int max_n);
std::string render_table_text(const SignatureTable& table);
nlohmann::json render_table_json(const SignatureTable& table);

}  // namespace ucg
