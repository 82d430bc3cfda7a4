#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "disorient/complex.hpp"
#include "disorient/disorient.hpp"

namespace disorient {

/// Two adjacent top simplices whose orientations cannot be made to agree on
/// their shared face, as reported by sign propagation.
struct Conflict {
  Simplex a;
  Simplex b;
  Simplex face;
};

/// Empty when the complex is disorientable. Throws std::invalid_argument when N = 0.
std::optional<Conflict> find_conflict(const SimplicialComplex& k);

struct SplitStep {
  Simplex subdivided_edge;
  VertexId new_vertex = 0;
  std::vector<Simplex> affected_top_simplices;  // each replaced by two
};

struct SplitLog {
  std::vector<SplitStep> steps;
  std::size_t total_top_simplices_split = 0;
  std::size_t iterations = 0;
};

/// Stellar subdivision of edge {a, b} with a fresh vertex m = vertex_count():
/// every simplex containing the edge is replaced by its two halves through m.
/// Throws std::invalid_argument unless e is a 1-simplex of k.
std::pair<SimplicialComplex, SplitStep> subdivide_edge(const SimplicialComplex& k, const Simplex& e);

/// Edge of `a` to subdivide for a conflict across `face`: it joins the vertex
/// of `a` opposite the face to a face vertex, minimizing the number of top
/// simplices that contain it (ties broken lexicographically).
Simplex choose_split_edge(const SimplicialComplex& k, const Simplex& a, const Simplex& face);

struct RepairResult {
  SimplicialComplex complex;
  SplitLog log;
  Disorientation disorientation;  // relative to the sorted orientation of `complex`
};

class IterationCapExceeded : public std::runtime_error {
public:
  IterationCapExceeded(SimplicialComplex partial, SplitLog log);
  const SimplicialComplex& partial() const { return partial_; }
  const SplitLog& log() const { return log_; }

private:
  SimplicialComplex partial_;
  SplitLog log_;
};

/// Subdivides until sign propagation succeeds. Subdividing an edge toggles
/// the parity violation of a fixed set of fundamental dual cycles, and
/// subdivisions of edges with no common top simplex act independently. Each
/// step takes the first edge of a plan of at most four such independent
/// subdivisions that clears every violation, preferring edges in few top
/// simplices. Without such a plan it takes the subdivision whose result has
/// the shortest plan, then the fewest violated cycles.
/// The default cap is 10 times the number of top simplices of k. Throws
/// IterationCapExceeded with the partial result when the cap is reached.
RepairResult make_disorientable(const SimplicialComplex& k, std::optional<std::size_t> max_iterations = {});

/// Betti numbers agree componentwise.
bool verify_topology_preserved(const SimplicialComplex& before, const SimplicialComplex& after);

}  // namespace disorient
