#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "disorient/complex.hpp"

namespace disorient {

enum class Adjacency { down, up };

/// Graph on the d-simplices of a complex. Each edge carries the index of the
/// simplex that witnesses the adjacency: the shared (d-1)-face for down
/// adjacency, the shared (d+1)-coface for up adjacency.
class DualGraph {
public:
  struct Edge {
    std::size_t u;  // u < v
    std::size_t v;
    std::size_t label;
  };
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  DualGraph(int dim, Adjacency adjacency, std::size_t vertex_count, std::vector<Edge> edges);

  int dim() const { return dim_; }
  Adjacency adjacency() const { return adjacency_; }
  /// Dimension of the simplices named by edge labels.
  int label_dim() const { return adjacency_ == Adjacency::down ? dim_ - 1 : dim_ + 1; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  /// Incident edges of v ordered by neighbor index.
  std::span<const Incidence> incident(std::size_t v) const { return adjacency_list_.at(v); }
  std::size_t degree(std::size_t v) const { return incident(v).size(); }

  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

private:
  int dim_;
  Adjacency adjacency_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_list_;
};

/// Simplices of dimension d adjacent through a shared (d-1)-face.
/// Throws std::out_of_range unless 1 <= d <= N.
DualGraph down_dual(const SimplicialComplex& k, int d);

/// Simplices of dimension d adjacent through a shared (d+1)-coface.
/// Throws std::out_of_range unless 0 <= d <= N-1.
DualGraph up_dual(const SimplicialComplex& k, int d);

/// Whether up_dual(k, d) is connected. At d = N the up-dual has no edges, so
/// only a single top simplex counts as connected. Throws std::out_of_range
/// when level d is empty.
bool is_d_connected(const SimplicialComplex& k, int d);

/// down_dual(g, 1). Throws std::invalid_argument if g is not a graph.
DualGraph line_graph(const SimplicialComplex& g);

/// Per-top-simplex sign applied on top of the sorted-vertex orientation.
/// Empty means every top simplex keeps its sorted orientation.
using ReferenceOrientation = std::vector<Sign>;

/// Top-dimensional down-dual graph with a coherence sign per edge:
/// w = +1 when the two (reference-oriented) simplices induce opposite
/// orientations on their shared face, w = -1 when they induce the same one.
struct SignedDualGraph {
  DualGraph graph;
  std::vector<Sign> coherence;
  ReferenceOrientation reference;  // one sign per top simplex

  Sign w(std::size_t edge) const { return coherence.at(edge); }
};

/// Throws std::invalid_argument when N = 0 or when a nonempty reference has
/// the wrong length.
SignedDualGraph signed_down_dual(const SimplicialComplex& k, const ReferenceOrientation& reference = {});

struct CycleClassification {
  std::vector<std::size_t> vertices;  // closed walk, first vertex not repeated
  std::vector<std::size_t> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod n]
  std::size_t length = 0;
  Sign w_product = Sign::plus();
  bool twisted = false;           // w_product == -1
  bool branching_exempt = false;  // every edge carries the same face label

  bool odd() const { return length % 2 == 1; }
  /// Simple cycles must be even and twisted cycles odd, unless exempt.
  bool violates_parity() const { return !branching_exempt && (twisted != odd()); }
};

/// Classifies a closed walk given as a vertex/edge sequence.
CycleClassification classify_cycle(const SignedDualGraph& g, std::vector<std::size_t> vertices,
                                   std::vector<std::size_t> edges);

/// BFS spanning forest: roots in ascending index order, neighbors visited in
/// index order.
struct SpanningForest {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> root;
  std::vector<std::size_t> order;  // BFS discovery order
  std::vector<bool> tree_edge;

  explicit SpanningForest(const DualGraph& g);
  /// An empty forest sized for g, to be filled by a caller-driven BFS.
  SpanningForest(const DualGraph& g, std::nullptr_t);

  /// Tree path from u up to the common ancestor and down to v, closed by the
  /// non-tree edge. Returns (vertices, edges).
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> cycle_through(const DualGraph& g,
                                                                              std::size_t edge) const;
};

/// One classified cycle per non-tree edge of the BFS spanning forest, in
/// edge-index order.
std::vector<CycleClassification> fundamental_cycles(const SignedDualGraph& g);

}  // namespace disorient
