#include "disorient/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace disorient::io {

namespace {

Json simplex_list(const LabeledComplex& k, int d, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(k.labels(k.complex.simplex(d, i)));
  return out;
}

/// Vertex ordering realizing an orientation: sorted, or with the first two
/// vertices swapped for the opposite orientation.
Json ordering_json(const LabeledComplex& k, const Simplex& s, Sign sign) {
  Json out = k.labels(s);
  if (!sign.positive() && out.size() >= 2) std::swap(out[0], out[1]);
  return out;
}

Sign reference_sign(const LabeledComplex& k, std::size_t top_index) {
  return k.reference.empty() ? Sign::plus() : k.reference[top_index];
}

Json certificate_json(const LabeledComplex& k, const SignedDualGraph& g, const Verdict& v) {
  const int n = k.complex.dimension();
  Json cert;
  if (v.disorientable()) {
    const auto& d = v.disorientation();
    cert["kind"] = "disorientation";
    Json orientations = Json::array();
    for (std::size_t i = 0; i < d.assignment.size(); ++i) {
      const Simplex& s = k.complex.simplex(n, i);
      orientations.push_back({{"simplex", k.labels(s)},
                              {"sign", d.assignment[i].value()},
                              {"ordering", ordering_json(k, s, reference_sign(k, i) * d.assignment[i])}});
    }
    cert["orientations"] = std::move(orientations);
    auto coloring = two_coloring(d);
    cert["two_coloring"] = {{"positive", simplex_list(k, n, coloring.positive)},
                            {"negative", simplex_list(k, n, coloring.negative)}};
    if (n == 1) {
      // Every edge induces the same sign on a shared vertex; that sign splits
      // the vertices into heads and tails.
      std::vector<int> side(k.complex.vertex_count(), 0);
      for (std::size_t i = 0; i < d.assignment.size(); ++i) {
        const Simplex& e = k.complex.simplex(1, i);
        OrientedSimplex oriented{e, reference_sign(k, i) * d.assignment[i]};
        for (const auto& f : faces(e)) side[f[0]] = induced_orientation(oriented, f).sign.value();
      }
      Json heads = Json::array(), tails = Json::array();
      for (VertexId x = 0; x < side.size(); ++x) {
        if (side[x] > 0) heads.push_back(k.label(x));
        if (side[x] < 0) tails.push_back(k.label(x));
      }
      cert["vertex_bipartition"] = {{"heads", std::move(heads)}, {"tails", std::move(tails)}};
    }
  } else {
    const auto& ob = v.obstruction();
    cert["kind"] = "obstruction";
    cert["violation"] = ob.cycle.twisted ? "twisted even cycle" : "simple odd cycle";
    cert["cycle"] = cycle_json(k, g, ob.cycle);
    cert["conflict"] = {{"a", k.labels(k.complex.simplex(n, ob.simplex_a))},
                        {"b", k.labels(k.complex.simplex(n, ob.simplex_b))},
                        {"face", k.labels(k.complex.simplex(n - 1, ob.shared_face))}};
  }
  return cert;
}

}  // namespace

Json cycle_json(const LabeledComplex& k, const SignedDualGraph& g, const CycleClassification& c) {
  const int n = g.graph.dim();
  Json faces_json = Json::array();
  for (auto e : c.edges) faces_json.push_back(k.labels(k.complex.simplex(n - 1, g.graph.edge(e).label)));
  return {{"length", c.length},
          {"twisted", c.twisted},
          {"w_product", c.w_product.value()},
          {"branching_exempt", c.branching_exempt},
          {"violation", c.violates_parity()},
          {"simplices", simplex_list(k, n, c.vertices)},
          {"shared_faces", std::move(faces_json)}};
}

Json spectrum_json(int dim, const char* kind, const SpectrumResult& s) {
  return {{"dimension", dim},
          {"kind", kind},
          {"eigenvalues", s.eigenvalues},
          {"zero_multiplicity", s.zero_multiplicity},
          {"lambda_max", s.lambda_max}};
}

Json check_report(const LabeledComplex& k, const CheckOptions& options) {
  const SimplicialComplex& c = k.complex;
  const SignedDualGraph g = signed_down_dual(c, k.reference);
  const Verdict v = check_disorientable(c, g);
  const auto basis = fundamental_cycles(g);

  Json r;
  if (v.disorientable()) {
    r["summary"] = "disorientable";
  } else {
    const auto& cyc = v.obstruction().cycle;
    r["summary"] = std::string("not disorientable: ") + (cyc.twisted ? "twisted even" : "simple odd") +
                   " cycle of length " + std::to_string(cyc.length);
  }
  r["disorientable"] = v.disorientable();
  r["cycle_parity_verdict"] = theorem1_verdict(basis);
  r["dimension"] = c.dimension();
  Json counts = Json::array();
  for (int d = 0; d <= c.dimension(); ++d) counts.push_back(c.count(d));
  r["simplex_counts"] = std::move(counts);
  r["dual_components"] = v.dual_components;

  Json branching = Json::array();
  for (const auto& f : v.branching.faces) {
    if (f.branching) {
      branching.push_back({{"face", k.labels(c.simplex(v.branching.face_dimension, f.face))}, {"degree", f.degree}});
    }
  }
  r["branching"] = {{"face_dimension", v.branching.face_dimension}, {"branching_faces", std::move(branching)}};
  Json ignored = Json::array();
  for (const auto& s : c.lower_dimensional_maximal()) ignored.push_back(k.labels(s));
  r["ignored_lower_dimensional"] = std::move(ignored);

  Json cycles = Json::array();
  for (const auto& cyc : basis) cycles.push_back(cycle_json(k, g, cyc));
  r["cycle_basis"] = std::move(cycles);

  Json betti = Json::array();
  Json spectra = Json::array();
  for (int d = 0; d <= c.dimension(); ++d) {
    if (c.count(d) > kMaxDenseSide) {
      betti.push_back(nullptr);
      continue;
    }
    auto s = spectrum(hodge_laplacian(c, d, LaplacianKind::full), kKernelTolerance);
    betti.push_back(s.zero_multiplicity);
    spectra.push_back(spectrum_json(d, "full", s));
  }
  if (c.dimension() == 1 && c.vertex_count() <= kMaxDenseSide) {
    bool isolated = false;
    for (std::size_t x = 0; x < c.vertex_count(); ++x) isolated = isolated || c.degree(0, x) == 0;
    if (!isolated) spectra.push_back(spectrum_json(0, "normalized", spectrum(normalized_graph_laplacian(c))));
  }
  r["betti"] = std::move(betti);
  r["spectra"] = std::move(spectra);

  if (options.certificate) r["certificate"] = certificate_json(k, g, v);
  if (options.oracle) {
    if (c.top_count() > kBruteForceCap) {
      r["oracle"] = {{"ran", false}, {"reason", "too many top simplices for exhaustive search"}};
    } else {
      auto bf = brute_force_disorientable(c, k.reference);
      r["oracle"] = {{"ran", true},
                     {"brute_force_disorientable", bf.disorientable()},
                     {"assignments_tried", bf.assignments_tried},
                     {"agrees", bf.disorientable() == v.disorientable()}};
    }
  }
  return r;
}

Json spectrum_report(const LabeledComplex& k, const SpectrumRequest& request) {
  const SimplicialComplex& c = k.complex;
  Json spectra = Json::array();
  if (request.kind == LaplacianKind::normalized_graph) {
    if (request.dim && *request.dim != 0) {
      throw std::out_of_range("the normalized Laplacian lives on vertices (dimension 0)");
    }
    spectra.push_back(spectrum_json(0, "normalized", spectrum(normalized_graph_laplacian(c))));
  } else {
    int lo = 0, hi = c.dimension();
    if (request.dim) {
      if (*request.dim < 0 || *request.dim > c.dimension()) {
        throw std::out_of_range("dimension " + std::to_string(*request.dim) + " outside [0, " +
                                std::to_string(c.dimension()) + "]");
      }
      lo = hi = *request.dim;
    }
    for (int d = lo; d <= hi; ++d) {
      spectra.push_back(spectrum_json(d, to_string(request.kind), spectrum(hodge_laplacian(c, d, request.kind))));
    }
  }
  return {{"spectra", std::move(spectra)}};
}

std::string spectrum_rows(const Json& report) {
  std::ostringstream out;
  out << "dimension,index,eigenvalue\n";
  char buf[64];
  for (const auto& s : report.at("spectra")) {
    const int d = s.at("dimension").get<int>();
    std::size_t i = 0;
    for (const auto& value : s.at("eigenvalues")) {
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      out << d << ',' << i++ << ',' << buf << '\n';
    }
  }
  return out.str();
}

Json dual_report(const LabeledComplex& k, const DualRequest& request) {
  const SimplicialComplex& c = k.complex;
  const bool top_down = request.adjacency == Adjacency::down && request.dim == c.dimension();
  if ((request.signed_edges || request.cycles) && !top_down) {
    throw std::invalid_argument("signs and cycles are defined for the down-dual in the top dimension only");
  }
  std::optional<SignedDualGraph> signed_graph;
  if (top_down && (request.signed_edges || request.cycles)) signed_graph = signed_down_dual(c, k.reference);
  const DualGraph graph = signed_graph ? signed_graph->graph
                          : request.adjacency == Adjacency::down ? down_dual(c, request.dim)
                                                                 : up_dual(c, request.dim);

  Json vertices = Json::array();
  for (const auto& s : c.simplices(request.dim)) vertices.push_back(k.labels(s));
  Json edges = Json::array();
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edge(i);
    Json row = {{"u", e.u}, {"v", e.v}, {"shared", k.labels(c.simplex(graph.label_dim(), e.label))}};
    if (signed_graph && request.signed_edges) row["w"] = signed_graph->w(i).value();
    edges.push_back(std::move(row));
  }
  Json r = {{"dimension", request.dim},
            {"adjacency", request.adjacency == Adjacency::down ? "down" : "up"},
            {"vertex_count", graph.vertex_count()},
            {"edge_count", graph.edges().size()},
            {"components", graph.component_count()},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
  if (request.cycles) {
    Json cycles = Json::array();
    for (const auto& cyc : fundamental_cycles(*signed_graph)) cycles.push_back(cycle_json(k, *signed_graph, cyc));
    r["cycle_basis"] = std::move(cycles);
  }
  return r;
}

LabeledComplex relabel_after_split(const LabeledComplex& before, SimplicialComplex after) {
  std::vector<std::string> names = before.vertex_names;
  std::set<std::string> used(names.begin(), names.end());
  for (std::size_t id = names.size(); id < after.vertex_count(); ++id) {
    std::string name = std::to_string(id);
    if (used.count(name)) name = "m" + std::to_string(id);
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(std::move(name));
  }
  return {std::move(after), std::move(names), {}};
}

Json split_log_json(const LabeledComplex& repaired, const SplitLog& log) {
  Json steps = Json::array();
  for (const auto& s : log.steps) {
    Json affected = Json::array();
    for (const auto& t : s.affected_top_simplices) affected.push_back(repaired.labels(t));
    steps.push_back({{"subdivided_edge", repaired.labels(s.subdivided_edge)},
                     {"new_vertex", repaired.label(s.new_vertex)},
                     {"affected_top_simplices", std::move(affected)}});
  }
  return {{"iterations", log.iterations},
          {"total_top_simplices_split", log.total_top_simplices_split},
          {"steps", std::move(steps)}};
}

}  // namespace disorient::io
