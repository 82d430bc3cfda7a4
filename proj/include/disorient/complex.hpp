#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "disorient/simplex.hpp"

namespace disorient {

/// An abstract simplicial complex, closed under taking faces.
///
/// Simplices of each dimension are stored in lexicographic order of their
/// sorted vertex tuples; that order is the canonical index used by every
/// matrix and graph built on top of the complex. Face lists follow the
/// omitted-index order of faces(); coface lists are ascending.
///
/// Instances are immutable once built.
class SimplicialComplex {
public:
  /// Downward closure of the given simplices. Duplicates and inputs that are
  /// faces of other inputs are absorbed. Vertex ids must cover [0, n) with
  /// no gaps. Throws std::invalid_argument on an empty list, an empty
  /// simplex, a repeated vertex inside one simplex, or gapped vertex ids.
  static SimplicialComplex from_maximal(const std::vector<std::vector<VertexId>>& maximal);
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  /// Largest d with a nonempty level.
  int dimension() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t vertex_count() const { return count(0); }
  /// Number of d-simplices; 0 outside [0, N].
  std::size_t count(int d) const;
  std::size_t top_count() const { return count(dimension()); }

  const std::vector<Simplex>& simplices(int d) const;
  const std::vector<Simplex>& top_simplices() const { return simplices(dimension()); }
  const Simplex& simplex(int d, std::size_t i) const { return simplices(d).at(i); }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Throws std::out_of_range when s is not in the complex.
  std::size_t require_index(const Simplex& s) const;

  std::span<const std::size_t> face_indices(int d, std::size_t i) const;
  std::span<const std::size_t> coface_indices(int d, std::size_t i) const;
  std::size_t degree(int d, std::size_t i) const { return coface_indices(d, i).size(); }

  /// Simplices with no cofaces, sorted by (dimension, lexicographic).
  std::vector<Simplex> maximal_simplices() const;
  /// Maximal simplices below the top dimension. The disorientability engine
  /// ignores these.
  std::vector<Simplex> lower_dimensional_maximal() const;

private:
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::unordered_map<Simplex, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

/// Convenience spelling of SimplicialComplex::from_maximal.
inline SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& maximal) {
  return SimplicialComplex::from_maximal(maximal);
}

/// All (dim(s)+1)-simplices of k containing s, in canonical order.
/// Throws std::out_of_range when s is not in k.
std::vector<Simplex> cofaces(const SimplicialComplex& k, const Simplex& s);

struct FaceDegree {
  std::size_t face = 0;  // index among the (N-1)-simplices
  std::size_t degree = 0;
  bool branching = false;  // degree > 2
};

/// Degrees of the codimension-one faces of the top level.
struct BranchingReport {
  int face_dimension = -1;
  std::vector<FaceDegree> faces;

  std::size_t branching_count() const;
  bool any_branching() const { return branching_count() > 0; }
};

/// Empty report for 0-dimensional complexes.
BranchingReport branching_report(const SimplicialComplex& k);

}  // namespace disorient
