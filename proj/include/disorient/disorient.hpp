#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "disorient/complex.hpp"
#include "disorient/dual_graph.hpp"
#include "disorient/spectral.hpp"

namespace disorient {

/// One sign per top simplex, relative to the reference orientation. Adjacent
/// top simplices induce the same orientation on their shared face:
/// assignment[u] * assignment[v] == -w(u, v) on every down-dual edge.
struct Disorientation {
  std::vector<Sign> assignment;
};

/// A dual cycle whose parity contradicts its twist, found where sign
/// propagation first failed.
struct Obstruction {
  CycleClassification cycle;
  std::size_t conflict_edge = 0;  // index into the signed down-dual's edges
  std::size_t simplex_a = 0;      // top simplex popped when the conflict was seen
  std::size_t simplex_b = 0;      // its already-assigned neighbor
  std::size_t shared_face = 0;    // (N-1)-simplex index
};

struct Verdict {
  std::variant<Disorientation, Obstruction> outcome;
  std::size_t dual_components = 0;
  BranchingReport branching;

  bool disorientable() const { return std::holds_alternative<Disorientation>(outcome); }
  const Disorientation& disorientation() const { return std::get<Disorientation>(outcome); }
  const Obstruction& obstruction() const { return std::get<Obstruction>(outcome); }
};

/// Sign propagation over the signed down-dual, one BFS per component (roots
/// ascending, neighbors ascending, root assigned +1). The first inconsistent
/// edge yields an Obstruction whose cycle is the BFS-tree path between its
/// endpoints closed by that edge. Throws std::invalid_argument when N = 0.
Verdict check_disorientable(const SimplicialComplex& k, const ReferenceOrientation& reference = {});
Verdict check_disorientable(const SimplicialComplex& k, const SignedDualGraph& g);

/// True when an assignment satisfies every down-dual edge constraint.
bool is_valid_disorientation(const SignedDualGraph& g, std::span<const Sign> assignment);

/// Cycle-parity characterization over a fundamental cycle basis: every
/// non-exempt simple cycle is even and every non-exempt twisted cycle is odd.
bool theorem1_verdict(std::span<const CycleClassification> cycles);

/// Top simplices split by the sign of a disorientation. Adjacent simplices
/// whose reference orientations already agree on the shared face may land in
/// the same class.
struct TopTwoColoring {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};
TopTwoColoring two_coloring(const Disorientation& d);

struct GraphBipartiteness {
  bool bipartite = false;
  VertexBipartition partition;      // set when bipartite; vertex 0 of each component goes first
  std::vector<VertexId> odd_cycle;  // set when not bipartite
};

/// BFS two-coloring of the vertices of a graph. Throws std::invalid_argument
/// if g is not 1-dimensional.
GraphBipartiteness is_bipartite_combinatorial(const SimplicialComplex& g);
/// Same test for an arbitrary dual graph (its vertices are simplices).
GraphBipartiteness is_bipartite_combinatorial(const DualGraph& g);

struct BruteForceVerdict {
  std::optional<Disorientation> disorientation;  // first valid assignment, + before -
  std::uint64_t assignments_tried = 0;

  bool disorientable() const { return disorientation.has_value(); }
};

inline constexpr std::size_t kBruteForceCap = 20;

/// Exhaustive search over all 2^m sign assignments of the m top simplices.
/// Throws std::length_error when m exceeds cap.
BruteForceVerdict brute_force_disorientable(const SimplicialComplex& k, const ReferenceOrientation& reference = {},
                                            std::size_t cap = kBruteForceCap);

}  // namespace disorient
