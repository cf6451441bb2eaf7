#include "ucg/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace ucg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto tok : split(line, ' ')) {
    for (auto t : split(tok, '\t')) {
      if (!t.empty()) out.push_back(t);
    }
  }
  return out;
}

long long parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> meaningful_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    line = strip_comment(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::length_error("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>(g.neighbors(i).contains(j));
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 contains a byte outside 63..126");
  }
  const int n = text[0] - 63;
  if (n > kGraph6MaxOrder) throw ParseError("graph6 orders above 62 are not supported");
  if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds maximum");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(1 + bytes) + " bytes for n=" +
                     std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  }
  const std::size_t padding = bytes * 6 - bits;
  if (padding > 0 && ((text.back() - 63) & ((1 << padding) - 1)) != 0) {
    throw ParseError("graph6 padding bits must be zero");
  }
  return Graph::from_edges(n, edges);
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_edgelist(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("edgelist is empty");
  const auto head = tokens(lines[0]);
  if (head.size() != 2) throw ParseError("edgelist header must be 'N M'");
  const long long n = parse_int(head[0], "N");
  const long long m = parse_int(head[1], "M");
  if (n < 0 || m < 0) throw ParseError("N and M must be non-negative");
  if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds maximum");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edgelist declares " + std::to_string(m) + " edges but lists " +
                     std::to_string(lines.size() - 1));
  }
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = tokens(lines[i]);
    if (t.size() != 2) throw ParseError("edge line must be 'u v': '" + std::string(lines[i]) + "'");
    const long long u = parse_int(t[0], "u");
    const long long v = parse_int(t[1], "v");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range: " + std::string(lines[i]));
    if (u == v) throw ParseError("self-loop: " + std::string(lines[i]));
    if (!seen.insert(Edge::make(static_cast<int>(u), static_cast<int>(v))).second) {
      throw ParseError("duplicate edge: " + std::string(lines[i]));
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::vector<Edge>(seen.begin(), seen.end()));
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edgelist(g);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Edgelist) return from_edgelist(text);
  const auto lines = meaningful_lines(text);
  if (lines.size() != 1) throw ParseError("graph6 input must hold exactly one graph");
  return from_graph6(lines[0]);
}

GraphFormat detect_format(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (!lines.empty() && tokens(lines[0]).size() == 2) return GraphFormat::Edgelist;
  return GraphFormat::Graph6;
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::Edgelist;
  if (name == "graph6") return GraphFormat::Graph6;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

PartitionSignature parse_signature(std::string_view text) {
  std::vector<int> parts;
  for (auto piece : split(trim(text), ',')) {
    const long long p = parse_int(piece, "signature part");
    if (p < 1) throw ParseError("signature parts must be positive");
    if (p > kMaxOrder) throw ParseError("signature part exceeds maximum order");
    parts.push_back(static_cast<int>(p));
  }
  return PartitionSignature(std::move(parts));
}

ColorPartition parse_partition_labels(std::string_view text) {
  std::vector<int> labels;
  for (auto piece : split(trim(text), ',')) {
    const long long label = parse_int(piece, "class label");
    if (label < 0) throw ParseError("class labels must be non-negative");
    labels.push_back(static_cast<int>(label));
  }
  return ColorPartition::from_labels(labels);
}

}  // namespace ucg::io
