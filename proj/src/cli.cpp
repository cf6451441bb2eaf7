#include "ucg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ucg/coloring.hpp"
#include "ucg/enumeration.hpp"
#include "ucg/io.hpp"
#include "ucg/transforms.hpp"
#include "ucg/upper_critical.hpp"
#include "ucg/verifier.hpp"

namespace ucg::cli {

namespace {

/// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the structural and definitional checks disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

Graph load_graph(const std::string& path, const std::string& format, std::ostream& err) {
  const std::string text = read_input(path);
  const io::GraphFormat f = format == "auto" ? io::detect_format(text) : io::parse_format_name(format);
  Graph g = io::parse_graph(text, f);
  if (!is_connected(g)) err << "warning: input graph is not connected\n";
  return g;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected 'u,v', got '" + text + "'");
  std::size_t used_u = 0;
  std::size_t used_v = 0;
  const std::string a = text.substr(0, comma);
  const std::string b = text.substr(comma + 1);
  int u = 0;
  int v = 0;
  try {
    u = std::stoi(a, &used_u);
    v = std::stoi(b, &used_v);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected 'u,v', got '" + text + "'");
  }
  if (used_u != a.size() || used_v != b.size()) throw std::invalid_argument("expected 'u,v', got '" + text + "'");
  return {u, v};
}

std::string signature_or_dash(const std::optional<PartitionSignature>& s) {
  if (!s) return "-";
  return s->parts().empty() ? "{}" : s->to_string();
}

int cmd_check(const std::string& file, const std::string& format, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(file, format, err);
  const bool by_definition = is_upper_critical_def(g);
  const auto signature = recognize(g);
  if (by_definition != signature.has_value()) {
    throw InternalError("definitional and structural checks disagree on " + io::to_graph6(g));
  }
  out << "upper-critical: " << bool_str(by_definition) << " chi: " << chromatic_number(g)
      << " signature: " << signature_or_dash(signature) << " connected: " << bool_str(is_connected(g)) << '\n';
  return kOk;
}

struct TransformArgs {
  std::string file = "-";
  std::string format = "auto";
  std::string op;
  int vertex = -1;
  std::string edge;
  int m = -1;
  std::string out_path;
  std::string out_format = "graph6";
};

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.file, a.format, err);
  const auto need_vertex = [&] {
    if (a.vertex < 0) throw std::invalid_argument("--op " + a.op + " needs --vertex");
    return a.vertex;
  };
  const auto need_edge = [&] {
    if (a.edge.empty()) throw std::invalid_argument("--op " + a.op + " needs --edge u,v");
    return parse_pair(a.edge);
  };
  TransformKind t;
  if (a.op == "delete-vertex") {
    t = transform::DeleteVertex{need_vertex()};
  } else if (a.op == "identify") {
    const auto [x, y] = need_edge();
    t = transform::IdentifyVertices{x, y};
  } else if (a.op == "contract-edge") {
    const auto [x, y] = need_edge();
    t = transform::ContractEdge{x, y};
  } else if (a.op == "add-copy") {
    t = transform::AddCopy{need_vertex()};
  } else if (a.op == "add-complete-vertex") {
    t = transform::AddCompleteVertex{};
  } else if (a.op == "add-edge") {
    const auto [x, y] = need_edge();
    t = transform::AddEdge{x, y};
  } else {
    if (a.m < 0) throw std::invalid_argument("--op remove-critical-edges needs --m");
    t = transform::RemoveCriticalEdges{a.m};
  }
  TransformResult r;
  try {
    r = apply_transform(g, t);
  } catch (const std::runtime_error& e) {
    out << e.what() << '\n';
    return kOk;
  }
  const MoveRecord& rec = r.record;
  out << "before " << rec.before.to_string() << " predicted " << (rec.predicted ? rec.predicted->to_string() : "-")
      << " actual " << rec.actual.to_string() << " preserved " << bool_str(rec.preserved) << '\n';
  if (rec.conditions) out << "conditions " << rec.conditions->to_string() << '\n';
  if (!a.out_path.empty()) write_file(a.out_path, io::serialize(r.graph, io::parse_format_name(a.out_format)));
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> theorems;
  int max_n = 6;
  int signature_max_n = 8;
  bool connected_only = false;
  bool self_test = false;
  unsigned workers = 0;
  std::string json_path;
};

void print_report(const TheoremReport& r, std::ostream& out) {
  out << summary_line(r) << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& w : r.witnesses) out << "  witness: " << io::to_graph6(w.graph) << ' ' << w.detail() << '\n';
}

void check_witnesses(const TheoremReport& r, const VerifyOptions& options) {
  for (const auto& w : r.witnesses) {
    if (!replay_witness(w, options)) throw InternalError("witness does not replay: " + w.detail());
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.bound.max_n = a.max_n;
  options.bound.signature_max_n = a.signature_max_n;
  options.bound.connected_only = a.connected_only;
  options.workers = a.workers;
  options.bound.validate();

  if (a.self_test) {
    options.predictor = corrupted_predictor();
    const TheoremReport r = verify_theorem(TheoremId::TableTravel, options);
    check_witnesses(r, options);
    print_report(r, out);
    if (r.status != Status::Falsified) {
      throw InternalError("self-test: corrupted predictor was not detected");
    }
    out << "self-test: corrupted predictor detected with " << r.witnesses.size() << " witnesses\n";
    return kOk;
  }

  std::vector<TheoremId> selected;
  for (const auto& name : a.theorems) {
    const auto id = parse_theorem(name);
    if (!id) throw std::invalid_argument("unknown theorem '" + name + "'");
    selected.push_back(*id);
  }
  if (selected.empty()) selected.assign(kAllTheorems.begin(), kAllTheorems.end());

  nlohmann::json reports = nlohmann::json::array();
  bool falsified = false;
  for (TheoremId id : selected) {
    const TheoremReport r = verify_theorem(id, options);
    check_witnesses(r, options);
    print_report(r, out);
    reports.push_back(to_json(r));
    falsified = falsified || r.status == Status::Falsified;
  }
  if (!a.json_path.empty()) write_file(a.json_path, reports.dump(2) + "\n");
  return falsified ? kFalsified : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper-critical (complete multipartite) graph toolkit", "ucg"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string format = "auto";
  std::string out_format = "graph6";
  std::string signature_text;
  std::string partition_text;
  int n = -1;
  int k = -1;
  int max_n = -1;
  bool json = false;
  bool all = false;
  bool with_signatures = false;
  TransformArgs targs;
  VerifyArgs vargs;

  const std::vector<std::string> formats{"auto", "edgelist", "graph6"};
  const std::vector<std::string> out_formats{"edgelist", "graph6"};

  auto* check = app.add_subcommand("check", "Decide upper-criticality and report chi, signature and connectivity");
  check->add_option("file", file, "Input graph ('-' for stdin)");
  check->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* construct_cmd = app.add_subcommand("construct", "Build the complete multipartite graph of a signature");
  construct_cmd->add_option("--signature", signature_text, "Comma-separated part sizes, e.g. 3,2,2")->required();
  construct_cmd->add_option("--out-format", out_format)->check(CLI::IsMember(out_formats));

  auto* saturate = app.add_subcommand("saturate", "Join every pair of differently coloured vertices");
  saturate->add_option("file", file, "Input graph ('-' for stdin)");
  saturate->add_option("--format", format)->check(CLI::IsMember(formats));
  saturate->add_option("--partition", partition_text, "Class label per vertex, e.g. 0,1,0,1");
  saturate->add_option("--out-format", out_format)->check(CLI::IsMember(out_formats));

  auto* transform_cmd = app.add_subcommand("transform", "Apply one transformation and compare with the prediction");
  transform_cmd->add_option("file", targs.file, "Input graph ('-' for stdin)");
  transform_cmd->add_option("--format", targs.format)->check(CLI::IsMember(formats));
  transform_cmd->add_option("--op", targs.op)
      ->required()
      ->check(CLI::IsMember({"delete-vertex", "identify", "contract-edge", "add-copy", "add-complete-vertex",
                             "add-edge", "remove-critical-edges"}));
  transform_cmd->add_option("--vertex", targs.vertex);
  transform_cmd->add_option("--edge", targs.edge, "Vertex pair u,v");
  transform_cmd->add_option("--m", targs.m, "Number of critical edges to remove");
  transform_cmd->add_option("--out", targs.out_path, "Write the resulting graph here");
  transform_cmd->add_option("--out-format", targs.out_format)->check(CLI::IsMember(out_formats));

  auto* count = app.add_subcommand("count", "Count partitions of N (into exactly K parts)");
  count->add_option("--n", n)->required();
  count->add_option("--k", k);

  auto* table = app.add_subcommand("table", "Upper-critical graphs by order and chromatic number");
  table->add_option("--max-n", max_n)->required();
  table->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "List upper-critical graphs of order N in graph6");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k);
  enumerate->add_flag("--all", all, "Include the edgeless graph");
  enumerate->add_flag("--signatures", with_signatures, "Append the signature to each line");

  auto* verify = app.add_subcommand("verify", "Check the theorems exhaustively within a bound");
  verify->add_option("--theorem", vargs.theorems, "Theorem tag (repeatable); default all");
  verify->add_option("--max-n", vargs.max_n, "Order bound for labeled graph scans");
  verify->add_option("--signature-max-n", vargs.signature_max_n, "Order bound for signature scans");
  verify->add_flag("--connected-only", vargs.connected_only);
  verify->add_flag("--self-test", vargs.self_test, "Run TABLE_TRAVEL against a deliberately wrong predictor");
  verify->add_option("--workers", vargs.workers);
  verify->add_option("--json", vargs.json_path, "Write the JSON report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, format, out, err);
    if (construct_cmd->parsed()) {
      out << io::serialize(construct(io::parse_signature(signature_text)), io::parse_format_name(out_format));
      return kOk;
    }
    if (saturate->parsed()) {
      const Graph h = load_graph(file, format, err);
      const ColorPartition p = partition_text.empty() ? optimal_coloring(h) : io::parse_partition_labels(partition_text);
      out << io::serialize(saturate_from_coloring(h, p), io::parse_format_name(out_format));
      return kOk;
    }
    if (transform_cmd->parsed()) return cmd_transform(targs, out, err);
    if (count->parsed()) {
      out << (k >= 0 ? count_partitions(n, k) : count_all_partitions(n)) << '\n';
      return kOk;
    }
    if (table->parsed()) {
      if (max_n > kMaxOrder) throw std::out_of_range("--max-n exceeds " + std::to_string(kMaxOrder));
      const SignatureTable t = emit_table(max_n);
      out << (json ? render_table_json(t).dump() + "\n" : render_table_text(t));
      return kOk;
    }
    if (enumerate->parsed()) {
      const std::optional<int> parts = k >= 0 ? std::optional<int>(k) : std::nullopt;
      for (const auto& s : upper_critical_signatures(n, parts, !all)) {
        out << io::to_graph6(construct(s));
        if (with_signatures) out << ' ' << s.to_string();
        out << '\n';
      }
      return kOk;
    }
    return cmd_verify(vargs, out);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseOrIo;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kParseOrIo;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace ucg::cli
