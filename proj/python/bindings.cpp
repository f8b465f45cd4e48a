#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distid/corpus.hpp"
#include "distid/gadgets.hpp"
#include "distid/io.hpp"
#include "distid/problems.hpp"
#include "distid/reductions.hpp"
#include "distid/solver.hpp"

namespace py = pybind11;
using namespace distid;

namespace {

VertexSet to_set(std::size_t n, const std::vector<Vertex>& vs) {
  for (Vertex v : vs)
    if (v >= n) throw py::index_error("vertex " + std::to_string(v) + " out of range");
  return VertexSet::of(n, vs);
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["k"] = r.k;
  d["witness"] = r.has_witness ? py::cast(r.witness.to_vector()) : py::none();
  d["nodes"] = r.nodes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_distid, m) {
  m.doc() = "Distance identifying sets: exact solver, gadgets and hardness reductions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw py::index_error("vertex out of range");
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("labels", [](const Graph& g) {
        std::vector<std::string> out;
        if (g.has_labels())
          for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.label(v).to_string());
        return out;
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
  m.def("format_graph", &format_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);

  py::class_<IdentifyingProblem>(m, "Problem")
      .def_property_readonly("name", &IdentifyingProblem::name)
      .def_property_readonly("radius", [](const IdentifyingProblem& p) { return p.radius().to_string(); })
      .def_property_readonly("claims", [](const IdentifyingProblem& p) {
        std::vector<std::string> out;
        for (const auto& t : p.claimed_traits()) out.push_back(t.to_string());
        return out;
      })
      .def("__repr__", [](const IdentifyingProblem& p) { return "Problem('" + p.name() + "')"; });
  m.def("parse_problem", [](const std::string& s) { return parse_problem(s); });

  m.def(
      "min_dis",
      [](const Graph& g, const IdentifyingProblem& p, std::uint64_t budget) {
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = min_dis(g, p, budget);
        }
        return result_dict(r);
      },
      py::arg("graph"), py::arg("problem"), py::arg("budget") = kDefaultBudget);
  m.def(
      "is_dis",
      [](const Graph& g, const IdentifyingProblem& p, const std::vector<Vertex>& c) {
        return is_dis(g, p, to_set(g.order(), c)).valid;
      },
      py::arg("graph"), py::arg("problem"), py::arg("vertices"));
  m.def(
      "check_trait",
      [](const IdentifyingProblem& p, const std::string& axiom) {
        static const std::vector<Graph> corpus = standard_corpus();
        return check_trait(p, AxiomQuery::parse(axiom), corpus).holds;
      },
      py::arg("problem"), py::arg("axiom"), "Exhaustive axiom test over the standard corpus.");

  py::class_<HittingSetInstance>(m, "HittingSetInstance")
      .def(py::init<std::size_t, std::vector<std::vector<HittingSetInstance::Element>>>(), py::arg("n"),
           py::arg("sets"))
      .def_property_readonly("n", &HittingSetInstance::universe_size)
      .def_property_readonly("sets", &HittingSetInstance::sets)
      .def("is_hitting_set",
           [](const HittingSetInstance& i, const std::vector<HittingSetInstance::Element>& e) {
             return i.is_hitting_set(e);
           })
      .def("__repr__", [](const HittingSetInstance& i) {
        return "HittingSetInstance(n=" + std::to_string(i.universe_size()) +
               ", m=" + std::to_string(i.set_count()) + ")";
      });
  m.def("parse_hs", [](const std::string& s) { return parse_hs(s); });
  m.def("format_hs", &format_hs);
  m.def(
      "min_hitting_set",
      [](const HittingSetInstance& inst, std::uint64_t budget) {
        SolveResult r = min_hitting_set(inst, budget);
        py::dict d = result_dict(r);
        d["witness"] = r.has_witness ? py::cast(witness_elements(r.witness)) : py::none();
        return d;
      },
      py::arg("instance"), py::arg("budget") = kDefaultBudget);
  m.def(
      "sat_to_hitting_set",
      [](std::uint32_t num_vars, std::vector<std::vector<int>> clauses) {
        return sat_to_hitting_set(Cnf{num_vars, std::move(clauses)});
      },
      py::arg("num_vars"), py::arg("clauses"));

  py::class_<Gadget>(m, "Gadget")
      .def_readonly("name", &Gadget::name)
      .def_property_readonly("order", &Gadget::order)
      .def_property_readonly("border", [](const Gadget& g) { return g.border.to_vector(); })
      .def_property_readonly("code", [](const Gadget& g) { return g.code.to_vector(); })
      .def_readonly("graph", &Gadget::h);
  m.def("parse_gadget", [](const std::string& s) { return parse_gadget(s); });
  m.def(
      "check_gadget",
      [](const Gadget& gad, const IdentifyingProblem& p, std::size_t random, std::size_t max_extra,
         std::uint64_t seed, std::uint64_t budget) {
        const auto family = standard_extension_family(gad, random, max_extra, seed);
        AxiomReport rep;
        {
          py::gil_scoped_release release;
          rep = check_gadget(gad, p, family, budget);
        }
        py::dict d;
        for (const auto& v : rep.verdicts) d[py::str(to_string(v.axiom))] = to_string(v.verdict);
        return d;
      },
      py::arg("gadget"), py::arg("problem"), py::arg("random") = 10, py::arg("max_extra") = 4,
      py::arg("seed") = 0x9a5e7, py::arg("budget") = kDefaultBudget);

  py::class_<ReductionArtifact>(m, "Reduction")
      .def_readonly("graph", &ReductionArtifact::graph)
      .def_property_readonly("kind", [](const ReductionArtifact& a) { return to_string(a.kind); })
      .def_readonly("r", &ReductionArtifact::r)
      .def_readonly("copies", &ReductionArtifact::copies)
      .def_readonly("offset", &ReductionArtifact::offset)
      .def_readonly("equivalence_tested", &ReductionArtifact::equivalence_tested)
      .def_property_readonly("vertex_bound", &vertex_bound)
      .def("manifest", [](const ReductionArtifact& a) { return format_manifest(make_manifest(a)); })
      .def("lift",
           [](const ReductionArtifact& a, const std::vector<HittingSetInstance::Element>& hs) {
             return lift_hitting_set(a, hs).to_vector();
           })
      .def("extract", [](const ReductionArtifact& a, const IdentifyingProblem& p, const std::vector<Vertex>& dis) {
        return extract_hitting_set(a, p, to_set(a.graph.order(), dis));
      })
      .def("require_compatible", &require_compatible);
  m.def(
      "build_reduction",
      [](const std::string& kind, const Gadget& gad, std::uint32_t r, const HittingSetInstance& inst) {
        return build_reduction(parse_reduction_kind(kind), gad, r, inst);
      },
      py::arg("kind"), py::arg("gadget"), py::arg("r"), py::arg("instance"));
}
