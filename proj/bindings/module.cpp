// Python bindings: labels cross the boundary in their canonical textual
// form, so the python surface works with plain strings, dicts and tuples.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "graphmonads/errors.hpp"
#include "graphmonads/families.hpp"
#include "graphmonads/io.hpp"
#include "graphmonads/matching.hpp"
#include "graphmonads/steiner.hpp"

namespace py = pybind11;
using namespace graphmonads;

namespace {

using StrMap = std::map<std::string, std::string>;
using StrTriple = std::tuple<std::string, std::string, std::string>;

VertexLabel lab(const std::string& s) { return VertexLabel::parse(s); }

LabelMap to_label_map(const StrMap& m) {
  LabelMap out;
  for (const auto& [k, v] : m) out.emplace(lab(k), lab(v));
  return out;
}

StrMap from_label_map(const LabelMap& m) {
  StrMap out;
  for (const auto& [k, v] : m) out.emplace(k.str(), v.str());
  return out;
}

std::vector<std::string> from_labels(const std::vector<VertexLabel>& ls) {
  std::vector<std::string> out;
  out.reserve(ls.size());
  for (const VertexLabel& l : ls) out.push_back(l.str());
  return out;
}

std::vector<VertexLabel> to_labels(const std::vector<std::string>& ss) {
  std::vector<VertexLabel> out;
  out.reserve(ss.size());
  for (const std::string& s : ss) out.push_back(lab(s));
  return out;
}

Graph make_graph_py(const std::vector<std::string>& vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<VertexLabel, VertexLabel>> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.emplace_back(lab(a), lab(b));
  return make_graph(to_labels(vertices), std::move(es));
}

Psts make_psts_py(const std::vector<std::string>& points, const std::vector<StrTriple>& triples) {
  std::vector<Triple> ts;
  ts.reserve(triples.size());
  for (const auto& [a, b, c] : triples) ts.push_back(make_triple(lab(a), lab(b), lab(c)));
  return Psts(to_labels(points), std::move(ts));
}

std::vector<StrTriple> triples_py(const Psts& p) {
  std::vector<StrTriple> out;
  out.reserve(p.triples().size());
  for (const Triple& t : p.triples()) {
    out.emplace_back(t[0].str(), t[1].str(), t[2].str());
  }
  return out;
}

py::list law_report_py(const LawReport& report) {
  py::list out;
  for (const auto& e : report.entries) {
    out.append(py::make_tuple(e.law, e.result.ok, e.result.witness));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "two monads on finite simple graphs: pendant edges (perfect matchings) "
            "and edge triangles (partial Steiner triple systems)";

  py::register_exception<GraphError>(m, "GraphError");

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("ok", &CheckResult::ok)
      .def_readonly("witness", &CheckResult::witness)
      .def("__bool__", [](const CheckResult& r) { return r.ok; })
      .def("__repr__", [](const CheckResult& r) {
        return r.ok ? std::string("CheckResult(ok)") : "CheckResult(fail: " + r.witness + ")";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph_py), py::arg("vertices"), py::arg("edges"))
      .def("vertices", [](const Graph& g) { return from_labels(g.vertices()); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.lo().str(), e.hi().str());
             return out;
           })
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("adjacent",
           [](const Graph& g, const std::string& u, const std::string& v) {
             return g.adjacent(lab(u), lab(v));
           })
      .def("neighbors",
           [](const Graph& g, const std::string& v) { return from_labels(g.neighbors(lab(v))); })
      .def("text", [](const Graph& g) { return serialize_edge_list(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("serialize_edge_list", &serialize_edge_list);
  m.def("graph_product", &graph_product);
  m.def("induced_subgraph", [](const Graph& g, const std::vector<std::string>& keep) {
    return induced_subgraph(g, to_labels(keep));
  });

  py::class_<Hom>(m, "Hom")
      .def(py::init([](const Graph& src, const Graph& dst, const StrMap& map) {
             return Hom(src, dst, to_label_map(map));
           }),
           py::arg("src"), py::arg("dst"), py::arg("map"))
      .def_property_readonly("src", &Hom::src)
      .def_property_readonly("dst", &Hom::dst)
      .def("mapping", [](const Hom& h) { return from_label_map(h.map()); })
      .def("__call__", [](const Hom& h, const std::string& v) { return h(lab(v)).str(); })
      .def(py::self == py::self)
      .def("__repr__", [](const Hom& h) {
        return "Hom(" + std::to_string(h.src().vertex_count()) + " -> " +
               std::to_string(h.dst().vertex_count()) + " vertices)";
      });

  m.def("is_homomorphism", [](const Graph& src, const Graph& dst, const StrMap& map) {
    return is_homomorphism(src, dst, to_label_map(map));
  });
  m.def("identity_hom", &identity_hom);
  m.def("compose", &compose, py::arg("g"), py::arg("f"));
  m.def("enumerate_homs", &enumerate_homs, py::arg("src"), py::arg("dst"),
        py::arg("candidate_cap") = kDefaultHomCandidateCap);
  m.def("product_projection_left", &product_projection_left);
  m.def("product_projection_right", &product_projection_right);
  m.def("pair_into_product", &pair_into_product);

  // pendant-edge monad
  m.def("T_on_objects", &T_on_objects);
  m.def("T_on_morphisms", &T_on_morphisms);
  m.def("eta_T", &eta_T);
  m.def("mu_T", &mu_T);
  m.def("check_monad_laws_T",
        [](const Graph& g) { return law_report_py(check_monad_laws_T(g)); });

  py::class_<PerfectMatching>(m, "PerfectMatching")
      .def(py::init([](const Graph& g, const StrMap& partner) {
             return PerfectMatching(g, to_label_map(partner));
           }),
           py::arg("graph"), py::arg("partner"))
      .def_property_readonly("graph", &PerfectMatching::graph)
      .def("partner_map", [](const PerfectMatching& pm) { return from_label_map(pm.partner_map()); })
      .def("partner",
           [](const PerfectMatching& pm, const std::string& v) { return pm.partner(lab(v)).str(); })
      .def(py::self == py::self)
      .def("__repr__", [](const PerfectMatching& pm) {
        return "PerfectMatching(" + std::to_string(pm.graph().vertex_count()) + " vertices)";
      });

  m.def("is_perfect_matching", [](const Graph& g, const StrMap& partner) {
    return is_perfect_matching(g, to_label_map(partner));
  });

  py::class_<TAlgebra>(m, "TAlgebra")
      .def(py::init<Graph, Hom>(), py::arg("graph"), py::arg("alpha"))
      .def_property_readonly("graph", &TAlgebra::graph)
      .def_property_readonly("alpha", &TAlgebra::alpha)
      .def(py::self == py::self);

  m.def("is_T_algebra", &is_T_algebra, py::arg("graph"), py::arg("alpha"));
  m.def("is_perf_morphism", &is_perf_morphism, py::arg("f"), py::arg("a"), py::arg("b"));
  m.def("matching_to_algebra", &matching_to_algebra);
  m.def("algebra_to_matching", &algebra_to_matching);
  m.def("product_perf", &product_perf);
  m.def("equalizer_perf", [](const Hom& f, const Hom& g, const PerfectMatching& a,
                             const PerfectMatching& b) {
    PerfEqualizer eq = equalizer_perf(f, g, a, b);
    return py::make_tuple(eq.object, eq.inclusion);
  });
  m.def("enumerate_matchings", &enumerate_matchings, py::arg("graph"),
        py::arg("vertex_cap") = kDefaultMatchingVertexCap);
  m.def("enumerate_T_algebras", &enumerate_T_algebras, py::arg("graph"),
        py::arg("vertex_cap") = kDefaultMatchingVertexCap);
  m.def("enumerate_perf_morphisms", &enumerate_perf_morphisms, py::arg("a"), py::arg("b"),
        py::arg("candidate_cap") = kDefaultHomCandidateCap);

  // triangle monad
  m.def("S_on_objects", &S_on_objects);
  m.def("S_on_morphisms", &S_on_morphisms);
  m.def("eta_S", &eta_S);
  m.def("mu_S", &mu_S);
  m.def("mu_S_vertex", [](const std::string& nested) { return mu_S_vertex(lab(nested)).str(); });
  m.def("check_monad_laws_S",
        [](const Graph& g) { return law_report_py(check_monad_laws_S(g)); });

  py::class_<Psts>(m, "Psts")
      .def(py::init(&make_psts_py), py::arg("points"), py::arg("triples"))
      .def("points", [](const Psts& p) { return from_labels(p.points()); })
      .def("triples", &triples_py)
      .def(py::self == py::self)
      .def("__repr__", [](const Psts& p) {
        return "Psts(" + std::to_string(p.points().size()) + " points, " +
               std::to_string(p.triples().size()) + " triples)";
      });

  m.def("check_psts",
        [](const std::vector<std::string>& points, const std::vector<StrTriple>& triples) {
          std::vector<Triple> ts;
          for (const auto& [a, b, c] : triples) ts.push_back(make_triple(lab(a), lab(b), lab(c)));
          return check_psts(to_labels(points), ts);
        });
  m.def("is_complete_sts", &is_complete_sts);
  m.def("support_graph", &support_graph);
  m.def("is_psts_morphism", [](const StrMap& f, const Psts& p, const Psts& q) {
    return is_psts_morphism(to_label_map(f), p, q);
  });

  py::class_<SAlgebra>(m, "SAlgebra")
      .def(py::init<Graph, Hom>(), py::arg("graph"), py::arg("alpha"))
      .def_property_readonly("graph", &SAlgebra::graph)
      .def_property_readonly("alpha", &SAlgebra::alpha)
      .def(py::self == py::self);

  m.def("is_S_algebra", &is_S_algebra, py::arg("graph"), py::arg("alpha"));
  m.def("algebra_to_psts", &algebra_to_psts);
  m.def("psts_to_algebra", &psts_to_algebra);
  m.def("product_psts", &product_psts);
  m.def("enumerate_psts_on", &enumerate_psts_on, py::arg("graph"),
        py::arg("vertex_cap") = kDefaultStsVertexCap);
  m.def("enumerate_S_algebras", &enumerate_S_algebras, py::arg("graph"),
        py::arg("vertex_cap") = kDefaultStsVertexCap);
  m.def("enumerate_psts_morphisms",
        [](const Psts& p, const Psts& q, std::uint64_t cap) {
          std::vector<StrMap> out;
          for (const LabelMap& f : enumerate_psts_morphisms(p, q, cap)) {
            out.push_back(from_label_map(f));
          }
          return out;
        },
        py::arg("p"), py::arg("q"), py::arg("candidate_cap") = kDefaultHomCandidateCap);

  // fixtures and families
  m.def("square_with_chord", &square_with_chord);
  m.def("fano_plane", &fano_plane);
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("edgeless_graph", &edgeless_graph);
  m.def("all_labeled_graphs", &all_labeled_graphs);

  m.attr("__version__") = "0.1.0";
}
