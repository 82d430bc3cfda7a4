#include "disorient/spectral.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace disorient {

namespace {

void require_dimension(int d, int lo, int hi) {
  if (d < lo || d > hi) {
    throw std::out_of_range("dimension " + std::to_string(d) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }
}

void require_graph(const SimplicialComplex& k) {
  if (k.dimension() != 1) {
    throw std::invalid_argument("expected a 1-dimensional complex (a graph), got dimension " +
                                std::to_string(k.dimension()));
  }
}

void require_connected_graph(const SimplicialComplex& k) {
  require_graph(k);
  if (connected_component_count(k) != 1) {
    throw std::invalid_argument("graph is disconnected; test each component separately");
  }
}

Eigen::MatrixXd to_real(const BoundaryMatrix& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b.rows), static_cast<Eigen::Index>(b.cols));
  for (const auto& e : b.entries) m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
  return m;
}

}  // namespace

Eigen::MatrixXi BoundaryMatrix::dense() const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (const auto& e : entries) m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
  return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  require_dimension(d, 1, k.dimension());
  BoundaryMatrix b;
  b.dim = d;
  b.rows = k.count(d - 1);
  b.cols = k.count(d);
  b.entries.reserve(b.cols * static_cast<std::size_t>(d + 1));
  for (std::size_t col = 0; col < b.cols; ++col) {
    auto fs = k.face_indices(d, col);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      b.entries.push_back({fs[j], col, omitted_position_sign(j).value()});
    }
  }
  return b;
}

const char* to_string(LaplacianKind kind) {
  switch (kind) {
    case LaplacianKind::full: return "full";
    case LaplacianKind::up: return "up";
    case LaplacianKind::down: return "down";
    case LaplacianKind::normalized_graph: return "normalized";
  }
  return "?";
}

LaplacianKind laplacian_kind_from_string(const std::string& name) {
  if (name == "full") return LaplacianKind::full;
  if (name == "up") return LaplacianKind::up;
  if (name == "down") return LaplacianKind::down;
  if (name == "normalized") return LaplacianKind::normalized_graph;
  throw std::invalid_argument("unknown Laplacian kind '" + name + "' (full, up, down, normalized)");
}

LaplacianMatrix hodge_laplacian(const SimplicialComplex& k, int d, LaplacianKind kind) {
  require_dimension(d, 0, k.dimension());
  if (kind == LaplacianKind::normalized_graph) {
    throw std::invalid_argument("use normalized_graph_laplacian for the normalized kind");
  }
  const auto n = static_cast<Eigen::Index>(k.count(d));
  LaplacianMatrix out{d, kind, Eigen::MatrixXd::Zero(n, n)};
  if (kind != LaplacianKind::up && d >= 1) {
    Eigen::MatrixXd b = to_real(boundary_matrix(k, d));
    out.matrix += b.transpose() * b;
  }
  if (kind != LaplacianKind::down && d < k.dimension()) {
    Eigen::MatrixXd b = to_real(boundary_matrix(k, d + 1));
    out.matrix += b * b.transpose();
  }
  return out;
}

LaplacianMatrix normalized_graph_laplacian(const SimplicialComplex& k) {
  require_graph(k);
  const std::size_t n = k.vertex_count();
  std::vector<double> inv_sqrt_deg(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t deg = k.degree(0, v);
    if (deg == 0) throw std::invalid_argument("isolated vertex " + std::to_string(v));
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(deg));
  }
  const auto size = static_cast<Eigen::Index>(n);
  LaplacianMatrix out{0, LaplacianKind::normalized_graph, Eigen::MatrixXd::Identity(size, size)};
  for (const auto& e : k.simplices(1)) {
    double w = inv_sqrt_deg[e[0]] * inv_sqrt_deg[e[1]];
    out.matrix(e[0], e[1]) -= w;
    out.matrix(e[1], e[0]) -= w;
  }
  return out;
}

SpectrumResult spectrum(const Eigen::MatrixXd& m, double zero_tolerance, std::size_t cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum needs a square matrix");
  if (static_cast<std::size_t>(m.rows()) > cap) {
    throw std::length_error("matrix side " + std::to_string(m.rows()) + " exceeds cap " + std::to_string(cap));
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * (1.0 + std::abs(m(i, j)))) {
        throw std::invalid_argument("spectrum needs a symmetric matrix");
      }
    }
  }
  SpectrumResult r;
  if (m.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  r.eigenvalues.assign(values.data(), values.data() + values.size());
  for (double v : r.eigenvalues) {
    if (std::abs(v) < zero_tolerance) ++r.zero_multiplicity;
  }
  r.lambda_max = r.eigenvalues.back();
  return r;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= k.dimension(); ++d) {
    out.push_back(spectrum(hodge_laplacian(k, d, LaplacianKind::full), kKernelTolerance).zero_multiplicity);
  }
  return out;
}

std::size_t connected_component_count(const SimplicialComplex& k) {
  const std::size_t n = k.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  if (k.dimension() >= 1) {
    for (const auto& e : k.simplices(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  }
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++components;
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
  }
  return components;
}

bool is_bipartite_spectral(const SimplicialComplex& k, double tol) {
  require_connected_graph(k);
  return std::abs(spectrum(normalized_graph_laplacian(k)).lambda_max - 2.0) < tol;
}

VertexBipartition spectral_bipartition(const SimplicialComplex& k, SpectralSide side) {
  require_connected_graph(k);
  const Eigen::MatrixXd l = normalized_graph_laplacian(k).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const Eigen::Index n = l.rows();
  const Eigen::Index column = side == SpectralSide::top ? n - 1 : std::min<Eigen::Index>(1, n - 1);
  Eigen::VectorXd x = solver.eigenvectors().col(column);

  constexpr double tie = 1e-9;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(x[i]) > tie) {
      if (x[i] < 0) x = -x;
      break;
    }
  }
  VertexBipartition out;
  for (Eigen::Index i = 0; i < n; ++i) {
    (x[i] > -tie ? out.first : out.second).push_back(static_cast<VertexId>(i));
  }
  return out;
}

}  // namespace disorient
