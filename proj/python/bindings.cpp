#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "fractri/errors.hpp"
#include "fractri/flow_decomposer.hpp"
#include "fractri/instance_lab.hpp"
#include "fractri/lp_oracle.hpp"
#include "fractri/verifier.hpp"

namespace py = pybind11;
using namespace fractri;

namespace {

using TriangleKey = std::tuple<Vertex, Vertex, Vertex>;

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_fraction_string(r)));
}

// Accepts Fraction, int, or a "p/q" / decimal string.
Rational from_python(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::dict weights_dict(const Decomposition& d) {
  py::dict out;
  for (const auto& e : d.entries) out[py::make_tuple(e.triangle.a, e.triangle.b, e.triangle.c)] = to_fraction(e.weight);
  return out;
}

Decomposition decomposition_from(const py::dict& weights) {
  Decomposition d;
  for (auto [key, value] : weights) {
    const auto [a, b, c] = key.cast<TriangleKey>();
    d.entries.push_back({make_triangle(a, b, c), from_python(value)});
  }
  return d;
}

Graph make_graph(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return Graph::from_edge_list(edges, n);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<TriangleKey> triangle_keys(const Graph& g) {
  std::vector<TriangleKey> out;
  for (const Triangle& t : enumerate_triangles(g)) out.emplace_back(t.a, t.b, t.c);
  return out;
}

Graph generate_py(const std::string& family, Vertex n, const py::object& fraction, std::uint64_t seed,
                  const std::vector<Vertex>& parts) {
  GenSpec spec;
  spec.family = parse_family(family);
  spec.n = n;
  spec.fraction = from_python(fraction);
  spec.seed = seed;
  spec.parts = parts;
  return generate(spec);
}

py::dict decompose_py(const Graph& g, std::size_t max_links) {
  const DecomposeReport r = decompose<Rational>(g, DecomposeOptions{max_links});
  py::dict out;
  out["ok"] = r.ok();
  out["delta"] = to_fraction(r.delta);
  out["required_value"] = to_fraction(r.required_value);
  out["flow_value"] = to_fraction(r.flow_value);
  out["link_count"] = r.link_count;
  std::vector<TriangleKey> peeled;
  for (const Triangle& t : r.peel.removed) peeled.emplace_back(t.a, t.b, t.c);
  out["peeled"] = peeled;
  if (const auto* d = std::get_if<Decomposition>(&r.outcome)) {
    out["weights"] = weights_dict(*d);
  } else {
    const auto& cut = std::get<CutCertificate>(r.outcome);
    out["cut_edges"] = cut.source_side_edges;
    out["cut_capacity"] = to_fraction(cut.cut_capacity);
  }
  return out;
}

py::dict verify_py(const Graph& g, const py::dict& weights) {
  const VerifyReport r = verify(g, decomposition_from(weights));
  py::dict out;
  out["pass"] = r.pass;
  out["worst_deviation"] = to_fraction(r.worst_deviation);
  out["bad_edges"] = r.bad_edges;
  out["negative_weights"] = r.negative_weights;
  out["non_triangles"] = r.non_triangles;
  out["summary"] = r.summary();
  return out;
}

py::object lp_feasible_py(const Graph& g, std::size_t max_triangles) {
  const FeasibilityVerdict v = lp_feasible(g, LpOptions{max_triangles});
  if (!v.feasible()) return py::none();
  return weights_dict(*v.witness);
}

}  // namespace

PYBIND11_MODULE(_fractri, m) {
  m.doc() = "Exact fractional triangle decompositions of dense graphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<GuardrailExceeded>(m, "GuardrailExceeded", PyExc_RuntimeError);
  py::register_exception<EdgeInNoTriangle>(m, "EdgeInNoTriangle", PyExc_ValueError);
  py::register_exception<StrandedEdge>(m, "StrandedEdge", PyExc_RuntimeError);
  py::register_exception<DegenerateMinDegree>(m, "DegenerateMinDegree", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("edge_id", &Graph::edge_id)
      .def("triangles", &triangle_keys)
      .def("triangle_counts", [](const Graph& g) { return triangle_counts(g); })
      .def("min_degree", [](const Graph& g) { return degree_stats(g).min_degree; })
      .def("delta", [](const Graph& g) { return to_fraction(degree_stats(g).delta); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<fractri.Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("generate", &generate_py, py::arg("family"), py::arg("n") = 0, py::arg("fraction") = py::int_(1),
        py::arg("seed") = 0, py::arg("parts") = std::vector<Vertex>{},
        "Build a graph from a named family: complete, complete-minus-hamilton, complete-multipartite, "
        "random-min-degree.");
  m.def("read_edge_list", py::overload_cast<std::string_view>(&read_edge_list), py::arg("text"));
  m.def("write_edge_list", &write_edge_list, py::arg("graph"));
  m.def("decompose", &decompose_py, py::arg("graph"), py::arg("max_links") = kDefaultMaxLinks,
        "Run the flow method. Returns a dict with 'weights' on success or 'cut_edges' and 'cut_capacity'.");
  m.def("verify", &verify_py, py::arg("graph"), py::arg("weights"));
  m.def("lp_feasible", &lp_feasible_py, py::arg("graph"), py::arg("max_triangles") = 5000,
        "Exact LP check. Returns a witness dict of weights, or None when no decomposition exists.");
}
