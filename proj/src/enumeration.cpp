#include "ucg/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucg {

PartitionCountTable::PartitionCountTable(int max_n) : max_n_(max_n) {
  if (max_n < 0 || max_n > kMaxPartitionN) {
    throw std::out_of_range("partition table supports 0 <= N <= " + std::to_string(kMaxPartitionN));
  }
  const auto size = static_cast<std::size_t>(max_n + 1);
  memo_.assign(size, std::vector<std::uint64_t>(size, 0));
  memo_[0][0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t a = memo_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
      const std::uint64_t b = memo_[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(k)];
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(a, b, &sum)) {
        throw std::overflow_error("P(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
      }
      memo_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = sum;
    }
  }
}

std::uint64_t PartitionCountTable::count(int n, int k) const {
  if (n < 0 || k < 0) throw std::invalid_argument("N and k must be non-negative");
  if (n > max_n_) throw std::out_of_range("N=" + std::to_string(n) + " exceeds table bound " + std::to_string(max_n_));
  if (k > n) return 0;
  return memo_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t count_partitions(int n, int k) {
  static const PartitionCountTable table;
  return table.count(n, k);
}

std::uint64_t count_all_partitions(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += count_partitions(n, k);
  return total;
}

namespace {

void generate(int remaining, int parts_left, int max_part, std::vector<int>& prefix,
              std::vector<PartitionSignature>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Each of the parts_left parts lies in [1, max_part].
  if (remaining < parts_left || remaining > parts_left * max_part) return;
  for (int p = std::min(max_part, remaining - (parts_left - 1)); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, parts_left - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PartitionSignature> partitions_of(int n, int k) {
  std::vector<PartitionSignature> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> prefix;
  generate(n, k, n, prefix, out);
  return out;
}

std::vector<PartitionSignature> upper_critical_signatures(int n, std::optional<int> k, bool connected_only) {
  std::vector<PartitionSignature> out;
  const int lo = k.value_or(n == 0 ? 0 : 1);
  const int hi = k.value_or(n);
  for (int parts = lo; parts <= hi; ++parts) {
    if (connected_only && n >= 2 && parts == 1) continue;
    for (auto& s : partitions_of(n, parts)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Graph> enumerate_upper_critical(int n, std::optional<int> k, bool connected_only) {
  if (n > kMaxOrder) throw std::length_error("order " + std::to_string(n) + " exceeds maximum");
  std::vector<Graph> out;
  for (const auto& s : upper_critical_signatures(n, k, connected_only)) out.push_back(construct(s));
  return out;
}

SignatureTable emit_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("table needs max_n >= 1");
  SignatureTable table;
  table.max_n = max_n;
  table.cells.assign(static_cast<std::size_t>(max_n),
                     std::vector<std::vector<std::string>>(static_cast<std::size_t>(max_n)));
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& s : upper_critical_signatures(n, k, /*connected_only=*/true)) {
        table.cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)].push_back(s.to_set_notation());
      }
    }
  }
  return table;
}

std::string render_table_text(const SignatureTable& table) {
  const auto cols = static_cast<std::size_t>(table.max_n) + 1;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"N\\k"};
  for (int k = 1; k <= table.max_n; ++k) header.push_back(std::to_string(k));
  grid.push_back(header);
  for (int n = 1; n <= table.max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& cell : table.cells[static_cast<std::size_t>(n - 1)]) {
      std::string text;
      for (std::size_t i = 0; i < cell.size(); ++i) text += (i ? ", " : "") + cell[i];
      row.push_back(text);
    }
    grid.push_back(row);
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) line += " | ";
      line += row[c];
      line.append(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

nlohmann::json render_table_json(const SignatureTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.cells) rows.push_back(row);
  return rows;
}

}  // namespace ucg
