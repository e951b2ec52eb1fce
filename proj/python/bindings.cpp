#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homgraph/claims.hpp"
#include "homgraph/errors.hpp"
#include "homgraph/hom.hpp"
#include "homgraph/isomorphism.hpp"
#include "homgraph/module_spec.hpp"

namespace py = pybind11;
using namespace homgraph;

namespace {

RingSpec ring_from_name(const std::string& name, std::int64_t p, int k) {
  RingSpec r;
  if (name == "zmod") r = RingSpec::zmod(p, k);
  else if (name == "field") r = RingSpec::prime_field(p);
  else if (name == "prod") r = RingSpec::product_field(p);
  else if (name == "kxy") r = RingSpec::local_square_zero(p);
  else throw InvalidInput("unknown ring '" + name + "' (expected zmod, field, prod or kxy)");
  r.validate();
  return r;
}

// Lattice and graph of one module, kept together so labels stay valid.
struct Analysis {
  SubmoduleLattice lattice;
  Graph graph;
};

Analysis analyze(const std::string& spec, const Limits& limits) {
  auto l = enumerate_submodules(parse_module_spec(spec, limits), limits);
  auto g = build_graph(l, limits);
  return {std::move(l), std::move(g)};
}

}  // namespace

PYBIND11_MODULE(_homgraph, m) {
  m.doc() = "Homomorphism graphs of submodule lattices over small finite rings";

  auto error = py::register_exception<Error>(m, "HomgraphError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<LocalityRequired>(m, "LocalityRequired", error.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", error.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", error.ptr());
  py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", error.ptr());

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_readwrite("max_module_order", &Limits::max_module_order)
      .def_readwrite("max_lattice", &Limits::max_lattice)
      .def_readwrite("max_spectrum", &Limits::max_spectrum)
      .def_readwrite("max_transitivity_vertices", &Limits::max_transitivity_vertices)
      .def_readwrite("max_oracle_order", &Limits::max_oracle_order)
      .def_readwrite("iso_search_budget", &Limits::iso_search_budget)
      .def_readwrite("tol", &Limits::tol);

  py::class_<ModulePresentation>(m, "Module")
      .def(py::init([](const std::string& spec, const Limits& limits) { return parse_module_spec(spec, limits); }), py::arg("spec"),
           py::arg("limits") = Limits{})
      .def_property_readonly("ring", [](const ModulePresentation& x) { return x.ring().name(); })
      .def_property_readonly("cyclic_orders", &ModulePresentation::cyclic_orders)
      .def_property_readonly("order", &ModulePresentation::order)
      .def_property_readonly("structure", &describe_structure)
      .def_property_readonly("composition_length", &composition_length)
      .def("__repr__", [](const ModulePresentation& x) { return "<Module " + describe_structure(x) + ">"; });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("labels",
                             [](const Graph& g) {
                               std::vector<std::string> out;
                               for (const auto& l : g.labels()) out.push_back(l.label);
                               return out;
                             })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("is_complete", &is_complete)
      .def("is_connected", &is_connected)
      .def("is_tree", &is_tree)
      .def("is_regular", &is_regular)
      .def("is_chordal", [](const Graph& g) { return is_chordal(g).chordal; })
      .def("diameter", &diameter)
      .def("universal_vertices", &universal_vertices)
      .def("export", [](const Graph& g, const std::string& format) { return export_graph(g, parse_export_format(format)); },
           py::arg("format") = "json");

  py::class_<Analysis>(m, "Analysis")
      .def_property_readonly("graph", [](const Analysis& a) { return a.graph; })
      .def_property_readonly("submodule_count", [](const Analysis& a) { return a.lattice.size(); })
      .def_property_readonly("uniserial", [](const Analysis& a) { return is_uniserial(a.lattice); })
      .def_property_readonly("semisimple", [](const Analysis& a) { return is_semisimple(a.lattice); })
      .def_property_readonly("submodule_orders", [](const Analysis& a) {
        std::vector<std::size_t> out;
        for (const auto& n : a.lattice.nodes()) out.push_back(n.order());
        return out;
      });

  m.def("analyze", &analyze, py::arg("spec"), py::arg("limits") = Limits{}, "Submodule lattice and homomorphism graph of a module spec");

  m.def("hom", [](const ModulePresentation& a, const ModulePresentation& b) { return hom_structure(a, b).invariant_factors; },
        "Invariant factors of Hom(A, B); empty for the zero group");
  m.def("hom_oracle",
        [](const ModulePresentation& a, const ModulePresentation& b, const Limits& limits) {
          return hom_oracle(a, b, limits).invariant_factors;
        },
        py::arg("a"), py::arg("b"), py::arg("limits") = Limits{});

  m.def("spectrum", [](const Graph& g, const Limits& limits) { return spectrum(g, limits).eigenvalues; }, py::arg("graph"),
        py::arg("limits") = Limits{}, "Adjacency eigenvalues, non-increasing");
  m.def("are_isomorphic", [](const Graph& a, const Graph& b) {
    const auto r = are_isomorphic(a, b);
    return py::make_tuple(r.isomorphic, r.isomorphic ? py::cast(r.mapping) : py::cast(r.distinguishing_invariant));
  });
  m.def("module_isomorphism", [](const ModulePresentation& a, const ModulePresentation& b) {
    const auto r = module_isomorphism(a, b);
    return py::make_tuple(r.isomorphic, r.certificate);
  });

  m.def("zoo",
        [](const std::string& ring, std::int64_t p, int k, std::size_t bound) {
          std::vector<std::string> out;
          for (const auto& z : enumerate_zoo(ring_from_name(ring, p, k), bound).members) out.push_back(z.spec);
          return out;
        },
        py::arg("ring"), py::arg("p") = 2, py::arg("k") = 1, py::arg("bound") = 3, "Member specs of a module zoo");
  m.def("verify_json",
        [](const std::string& ring, std::int64_t p, int k, std::size_t bound, const std::string& suite) {
          py::gil_scoped_release release;
          return verdicts_to_json(run_claim_suite(enumerate_zoo(ring_from_name(ring, p, k), bound), {}, suite));
        },
        py::arg("ring"), py::arg("p") = 2, py::arg("k") = 1, py::arg("bound") = 3, py::arg("suite") = "all");
}
