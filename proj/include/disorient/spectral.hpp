#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "disorient/complex.hpp"

namespace disorient {

/// Signed incidence between (d-1)-simplices (rows) and d-simplices (columns),
/// in canonical index order, stored as triplets.
struct BoundaryMatrix {
  struct Entry {
    std::size_t row;
    std::size_t col;
    int value;
  };

  int dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  Eigen::MatrixXi dense() const;
};

/// B_d for 1 <= d <= N. Throws std::out_of_range otherwise.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d);

enum class LaplacianKind { full, up, down, normalized_graph };

const char* to_string(LaplacianKind kind);
/// Accepts "full", "up", "down", "normalized"; throws std::invalid_argument.
LaplacianKind laplacian_kind_from_string(const std::string& name);

struct LaplacianMatrix {
  int dim = 0;
  LaplacianKind kind = LaplacianKind::full;
  Eigen::MatrixXd matrix;
};

/// down = B_d^T B_d, up = B_{d+1} B_{d+1}^T, full = up + down. A term that
/// does not exist (down at d = 0, up at d = N) is the zero matrix.
/// Throws std::out_of_range for d outside [0, N] and std::invalid_argument for
/// kind == normalized_graph.
LaplacianMatrix hodge_laplacian(const SimplicialComplex& k, int d, LaplacianKind kind);

/// I - D^{-1/2} A D^{-1/2} over the vertices of a graph.
/// Throws std::invalid_argument if k is not 1-dimensional or has an isolated vertex.
LaplacianMatrix normalized_graph_laplacian(const SimplicialComplex& k);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::size_t zero_multiplicity = 0;
  double lambda_max = 0.0;
};

inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kKernelTolerance = 1e-7;
inline constexpr std::size_t kMaxDenseSide = 2000;

/// Eigenvalues of a symmetric matrix. Values with |lambda| < zero_tolerance
/// count toward zero_multiplicity. Throws std::invalid_argument for a
/// non-square or non-symmetric input and std::length_error above the cap.
SpectrumResult spectrum(const Eigen::MatrixXd& m, double zero_tolerance = kEigenTolerance,
                        std::size_t cap = kMaxDenseSide);
inline SpectrumResult spectrum(const LaplacianMatrix& m, double zero_tolerance = kEigenTolerance,
                               std::size_t cap = kMaxDenseSide) {
  return spectrum(m.matrix, zero_tolerance, cap);
}

/// beta_d = dim ker L_d for d = 0..N, kernel threshold kKernelTolerance.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);

/// Components of the 1-skeleton, by traversal.
std::size_t connected_component_count(const SimplicialComplex& k);

/// |lambda_max(normalized L_0) - 2| < tol. Requires a connected graph;
/// throws std::invalid_argument otherwise.
bool is_bipartite_spectral(const SimplicialComplex& k, double tol = 1e-8);

enum class SpectralSide { top, bottom };

struct VertexBipartition {
  std::vector<VertexId> first;
  std::vector<VertexId> second;
};

/// Splits the vertices of a connected graph by the sign of the eigenvector of
/// lambda_max (top) or lambda_2 (bottom) of the normalized Laplacian. The
/// eigenvector is scaled so its first entry above 1e-9 in magnitude is
/// positive; positive and near-zero entries go to `first`.
VertexBipartition spectral_bipartition(const SimplicialComplex& k, SpectralSide side);

}  // namespace disorient
