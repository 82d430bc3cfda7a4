#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "disorient/disorient.hpp"
#include "disorient/generators.hpp"
#include "disorient/io.hpp"
#include "disorient/report.hpp"
#include "disorient/spectral.hpp"
#include "disorient/splitting.hpp"

namespace py = pybind11;
using namespace disorient;

namespace {

std::vector<VertexId> vertices(const Simplex& s) { return {s.begin(), s.end()}; }

std::vector<std::vector<VertexId>> vertex_lists(const std::vector<Simplex>& list) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(list.size());
  for (const auto& s : list) out.push_back(vertices(s));
  return out;
}

ReferenceOrientation reference_from(const std::optional<std::vector<int>>& signs) {
  ReferenceOrientation ref;
  if (!signs) return ref;
  for (int s : *signs) ref.push_back(Sign::from_int(s));
  return ref;
}

std::vector<int> ints(const std::vector<Sign>& signs) {
  std::vector<int> out;
  out.reserve(signs.size());
  for (auto s : signs) out.push_back(s.value());
  return out;
}

py::dict cycle_dict(const CycleClassification& c) {
  py::dict d;
  d["vertices"] = c.vertices;
  d["edges"] = c.edges;
  d["length"] = c.length;
  d["w_product"] = c.w_product.value();
  d["twisted"] = c.twisted;
  d["branching_exempt"] = c.branching_exempt;
  d["violates_parity"] = c.violates_parity();
  return d;
}

py::dict verdict_dict(const SimplicialComplex& k, const Verdict& v) {
  py::dict d;
  d["disorientable"] = v.disorientable();
  d["dual_components"] = v.dual_components;
  d["branching"] = v.branching.any_branching();
  if (v.disorientable()) {
    d["assignment"] = ints(v.disorientation().assignment);
  } else {
    const auto& ob = v.obstruction();
    const int n = k.dimension();
    py::dict o;
    o["cycle"] = cycle_dict(ob.cycle);
    o["simplex_a"] = vertices(k.simplex(n, ob.simplex_a));
    o["simplex_b"] = vertices(k.simplex(n, ob.simplex_b));
    o["shared_face"] = vertices(k.simplex(n - 1, ob.shared_face));
    d["obstruction"] = o;
  }
  return d;
}

py::dict log_dict(const SplitLog& log) {
  py::list steps;
  for (const auto& s : log.steps) {
    py::dict d;
    d["subdivided_edge"] = vertices(s.subdivided_edge);
    d["new_vertex"] = s.new_vertex;
    d["affected_top_simplices"] = vertex_lists(s.affected_top_simplices);
    steps.append(d);
  }
  py::dict d;
  d["steps"] = steps;
  d["iterations"] = log.iterations;
  d["total_top_simplices_split"] = log.total_top_simplices_split;
  return d;
}

io::LabeledComplex document(const std::string& text) { return io::parse_complex(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Disorientability of simplicial complexes";

  py::register_exception<IterationCapExceeded>(m, "IterationCapExceeded", PyExc_RuntimeError);
  py::register_exception<io::DocumentError>(m, "DocumentError", PyExc_ValueError);

  py::class_<SimplicialComplex>(m, "Complex")
      .def(py::init([](const std::vector<std::vector<VertexId>>& maximal) {
             return SimplicialComplex::from_maximal(maximal);
           }),
           py::arg("maximal_simplices"))
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("top_count", &SimplicialComplex::top_count)
      .def("count", &SimplicialComplex::count, py::arg("d"))
      .def("simplices", [](const SimplicialComplex& k, int d) { return vertex_lists(k.simplices(d)); }, py::arg("d"))
      .def_property_readonly("top_simplices", [](const SimplicialComplex& k) { return vertex_lists(k.top_simplices()); })
      .def_property_readonly("maximal_simplices",
                             [](const SimplicialComplex& k) { return vertex_lists(k.maximal_simplices()); })
      .def("__repr__", [](const SimplicialComplex& k) {
        return "<Complex dim=" + std::to_string(k.dimension()) + " vertices=" + std::to_string(k.vertex_count()) +
               " top=" + std::to_string(k.top_count()) + ">";
      });

  m.def(
      "check_disorientable",
      [](const SimplicialComplex& k, const std::optional<std::vector<int>>& reference) {
        return verdict_dict(k, check_disorientable(k, reference_from(reference)));
      },
      py::arg("complex"), py::arg("reference") = py::none());
  m.def(
      "brute_force_disorientable",
      [](const SimplicialComplex& k, const std::optional<std::vector<int>>& reference) -> py::object {
        auto v = brute_force_disorientable(k, reference_from(reference));
        if (!v.disorientable()) return py::none();
        return py::cast(ints(v.disorientation->assignment));
      },
      py::arg("complex"), py::arg("reference") = py::none(),
      "First valid sign assignment in exhaustive order, or None.");
  m.def(
      "fundamental_cycles",
      [](const SimplicialComplex& k, const std::optional<std::vector<int>>& reference) {
        py::list out;
        for (const auto& c : fundamental_cycles(signed_down_dual(k, reference_from(reference)))) {
          out.append(cycle_dict(c));
        }
        return out;
      },
      py::arg("complex"), py::arg("reference") = py::none());
  m.def(
      "cycle_parity_verdict",
      [](const SimplicialComplex& k) { return theorem1_verdict(fundamental_cycles(signed_down_dual(k))); },
      py::arg("complex"));
  m.def(
      "is_bipartite",
      [](const SimplicialComplex& g) { return is_bipartite_combinatorial(g).bipartite; }, py::arg("graph"));
  m.def("is_bipartite_spectral", &is_bipartite_spectral, py::arg("graph"), py::arg("tol") = 1e-8);

  m.def(
      "boundary_matrix", [](const SimplicialComplex& k, int d) { return Eigen::MatrixXi(boundary_matrix(k, d).dense()); },
      py::arg("complex"), py::arg("d"));
  m.def(
      "laplacian",
      [](const SimplicialComplex& k, int d, const std::string& kind) {
        const auto parsed = laplacian_kind_from_string(kind);
        return parsed == LaplacianKind::normalized_graph ? normalized_graph_laplacian(k).matrix
                                                         : hodge_laplacian(k, d, parsed).matrix;
      },
      py::arg("complex"), py::arg("d") = 0, py::arg("kind") = "full");
  m.def(
      "spectrum",
      [](const SimplicialComplex& k, int d, const std::string& kind) {
        const auto parsed = laplacian_kind_from_string(kind);
        return spectrum(parsed == LaplacianKind::normalized_graph ? normalized_graph_laplacian(k)
                                                                  : hodge_laplacian(k, d, parsed))
            .eigenvalues;
      },
      py::arg("complex"), py::arg("d") = 0, py::arg("kind") = "full");
  m.def("betti_numbers", &betti_numbers, py::arg("complex"));

  m.def(
      "subdivide_edge",
      [](const SimplicialComplex& k, const std::vector<VertexId>& edge) {
        auto [next, step] = subdivide_edge(k, Simplex(edge));
        return py::make_tuple(std::move(next), step.new_vertex, vertex_lists(step.affected_top_simplices));
      },
      py::arg("complex"), py::arg("edge"));
  m.def(
      "make_disorientable",
      [](const SimplicialComplex& k, std::optional<std::size_t> max_iterations) {
        auto r = make_disorientable(k, max_iterations);
        return py::make_tuple(std::move(r.complex), log_dict(r.log), ints(r.disorientation.assignment));
      },
      py::arg("complex"), py::arg("max_iterations") = py::none(),
      "Returns (repaired complex, split log, disorientation).");

  m.def("generator_names", &generators::names);
  m.def(
      "generate",
      [](const std::string& name, std::size_t n, std::size_t m_, std::size_t k, std::size_t pages, bool closed,
         bool twisted) {
        return generators::generate(name, {n, m_, k, pages, closed, twisted});
      },
      py::arg("name"), py::kw_only(), py::arg("n") = 0, py::arg("m") = 0, py::arg("k") = 0, py::arg("pages") = 0,
      py::arg("closed") = false, py::arg("twisted") = false);

  m.def(
      "parse_document", [](const std::string& text) { return document(text).complex; }, py::arg("text"));
  m.def(
      "write_document",
      [](const SimplicialComplex& k) { return io::write_complex(io::with_default_labels(k)).dump(); },
      py::arg("complex"));
  m.def(
      "check_report",
      [](const std::string& text, bool certificate, bool oracle) {
        return io::check_report(document(text), {certificate, oracle}).dump();
      },
      py::arg("text"), py::arg("certificate") = false, py::arg("oracle") = false);
}
