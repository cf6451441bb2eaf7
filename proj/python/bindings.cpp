#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucg/coloring.hpp"
#include "ucg/enumeration.hpp"
#include "ucg/graph.hpp"
#include "ucg/io.hpp"
#include "ucg/transforms.hpp"
#include "ucg/upper_critical.hpp"
#include "ucg/verifier.hpp"

namespace py = pybind11;
using namespace ucg;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<std::pair<int, int>> from_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::vector<int>> classes_of(const ColorPartition& p) {
  std::vector<std::vector<int>> out;
  for (VertexSet c : p.classes()) out.push_back(c.to_vector());
  return out;
}

py::dict point_dict(const SpacePoint& p) {
  py::dict d;
  d["order"] = p.order;
  d["chroma"] = p.chroma;
  return d;
}

py::tuple move_result(const TransformResult& r) {
  py::dict rec;
  rec["before"] = point_dict(r.record.before);
  rec["predicted"] = r.record.predicted ? py::object(point_dict(*r.record.predicted)) : py::object(py::none());
  rec["actual"] = point_dict(r.record.actual);
  rec["preserved"] = r.record.preserved;
  if (r.record.conditions) {
    const AddEdgeConditions& c = *r.record.conditions;
    py::dict cond;
    cond["cond1_strict"] = c.cond1_strict;
    cond["cond1_loose"] = c.cond1_loose;
    cond["cond2"] = c.cond2;
    cond["closed_neighborhood_size"] = c.closed_neighborhood_size;
    cond["closed_neighborhood_complete"] = c.closed_neighborhood_complete;
    cond["complement_edges"] = c.complement_edges;
    rec["conditions"] = cond;
  } else {
    rec["conditions"] = py::none();
  }
  return py::make_tuple(r.graph, rec);
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

VerifyOptions make_options(int max_n, int signature_max_n, bool connected_only, unsigned workers) {
  VerifyOptions o;
  o.bound.max_n = max_n;
  o.bound.signature_max_n = signature_max_n;
  o.bound.connected_only = connected_only;
  o.workers = workers;
  return o;
}

TheoremId theorem_or_throw(const std::string& name) {
  const auto id = parse_theorem(name);
  if (!id) throw py::value_error("unknown theorem '" + name + "'");
  return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Upper-critical graph toolkit (C++ core)";
  m.attr("MAX_ORDER") = kMaxOrder;

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("order") = 0)
      .def_static(
          "from_edges",
          [](int order, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edges(order, to_edges(edges));
          },
          py::arg("order"), py::arg("edges"))
      .def_static("complete", &Graph::complete)
      .def_static("cycle", &Graph::cycle)
      .def_static("path", &Graph::path)
      .def_static("from_graph6", [](const std::string& s) { return io::from_graph6(s); })
      .def_static("from_edgelist", [](const std::string& s) { return io::from_edgelist(s); })
      .def_property_readonly("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v, bool closed) { return neighborhood(g, v, closed).to_vector(); },
           py::arg("v"), py::arg("closed") = false)
      .def("to_graph6", [](const Graph& g) { return io::to_graph6(g); })
      .def("to_edgelist", [](const Graph& g) { return io::to_edgelist(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " graph6='" + io::to_graph6(g) + "'>";
      });

  m.def("complement", &complement);
  m.def("join", &join);
  m.def("is_connected", &is_connected);
  m.def("contains_clique", &contains_clique);
  m.def("is_isomorphic", &is_isomorphic);

  m.def("chromatic_number", &chromatic_number);
  m.def("enumerate_proper_partitions", [](const Graph& g, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : enumerate_proper_partitions(g, k)) out.push_back(classes_of(p));
    return out;
  });
  m.def("is_uniquely_colorable", &is_uniquely_colorable);

  m.def("is_upper_critical_def", &is_upper_critical_def);
  m.def("recognize", [](const Graph& g) -> std::optional<std::vector<int>> {
    auto s = recognize(g);
    if (!s) return std::nullopt;
    return s->parts();
  });
  m.def("construct", [](const std::vector<int>& parts) { return construct(PartitionSignature(parts)); });
  m.def(
      "saturate_from_coloring",
      [](const Graph& h, const std::vector<int>& labels) {
        return saturate_from_coloring(h, ColorPartition::from_labels(labels));
      },
      py::arg("graph"), py::arg("labels"));

  m.def("delete_vertex", [](const Graph& g, int x) { return move_result(delete_vertex(g, x)); });
  m.def("identify_vertices", [](const Graph& g, int x, int y) { return move_result(identify_vertices(g, x, y)); });
  m.def("contract_edge", [](const Graph& g, int x, int y) { return move_result(contract_edge(g, x, y)); });
  m.def("add_copy", [](const Graph& g, int x) { return move_result(add_copy(g, x)); });
  m.def("add_complete_vertex", [](const Graph& g) { return move_result(add_complete_vertex(g)); });
  m.def("add_edge_with_conditions",
        [](const Graph& g, int x, int y) { return move_result(add_edge_with_conditions(g, x, y)); });
  m.def("critical_sequence_search", [](int k, int mm) -> py::object {
    auto seq = critical_sequence_search(k, mm);
    if (!seq) return py::none();
    return py::make_tuple(from_edges(seq->removed), seq->result);
  });

  m.def("count_partitions", &count_partitions);
  m.def("partitions_of", [](int n, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& s : partitions_of(n, k)) out.push_back(s.parts());
    return out;
  });
  m.def("enumerate_upper_critical", &enumerate_upper_critical, py::arg("n"), py::arg("k") = std::nullopt,
        py::arg("connected_only") = false);
  m.def(
      "emit_table",
      [](int max_n, bool as_json) -> py::object {
        const SignatureTable t = emit_table(max_n);
        if (as_json) return json_to_python(render_table_json(t));
        return py::str(render_table_text(t));
      },
      py::arg("max_n"), py::arg("as_json") = false);

  m.def("theorems", [] {
    std::vector<std::string> out;
    for (TheoremId id : kAllTheorems) out.emplace_back(theorem_name(id));
    return out;
  });
  m.def(
      "verify_theorem",
      [](const std::string& name, int max_n, int signature_max_n, bool connected_only, unsigned workers) {
        const VerifyOptions o = make_options(max_n, signature_max_n, connected_only, workers);
        const TheoremId id = theorem_or_throw(name);
        nlohmann::json j;
        {
          py::gil_scoped_release release;
          j = to_json(verify_theorem(id, o));
        }
        return json_to_python(j);
      },
      py::arg("theorem"), py::arg("max_n") = 6, py::arg("signature_max_n") = 8, py::arg("connected_only") = false,
      py::arg("workers") = 0);
  m.def(
      "verify_all",
      [](int max_n, int signature_max_n, bool connected_only, unsigned workers) {
        const VerifyOptions o = make_options(max_n, signature_max_n, connected_only, workers);
        nlohmann::json j = nlohmann::json::array();
        {
          py::gil_scoped_release release;
          for (const auto& r : verify_all(o)) j.push_back(to_json(r));
        }
        return json_to_python(j);
      },
      py::arg("max_n") = 6, py::arg("signature_max_n") = 8, py::arg("connected_only") = false,
      py::arg("workers") = 0);
}
