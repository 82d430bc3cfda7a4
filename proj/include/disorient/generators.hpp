#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "disorient/complex.hpp"

namespace disorient::generators {

// All generators throw std::invalid_argument below their minimum sizes.

SimplicialComplex cycle_graph(std::size_t n);     // n >= 3
SimplicialComplex path_graph(std::size_t n);      // n >= 2 vertices
SimplicialComplex complete_graph(std::size_t n);  // n >= 2
SimplicialComplex star(std::size_t leaves);       // leaves >= 1, center is vertex 0

/// Zigzag strip of k triangles {u_i, u_{i+1}, u_{i+2}}. Closed strips glue
/// the last edge to the first, straight (annulus) or with a half turn
/// (Mobius strip). Open strips have k + 2 vertices and ignore `twisted`.
/// Closed: twisted needs k >= 5, untwisted needs k >= 6.
SimplicialComplex triangle_strip(std::size_t k, bool closed, bool twisted);

/// Boundary of the n-simplex on vertices 0..n, n >= 2.
SimplicialComplex simplex_boundary(std::size_t n);

/// m x n vertex grid, two triangles per cell, both directions wrapped.
/// m, n >= 3.
SimplicialComplex torus(std::size_t m, std::size_t n);
/// As torus, but wrapping rows reverses the column direction. m, n >= 3.
SimplicialComplex klein_bottle(std::size_t m, std::size_t n);

/// `pages` triangles {0, 1, p + 2} sharing the edge {0, 1}. pages >= 1.
SimplicialComplex book(std::size_t pages);

struct GeneratorParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t pages = 0;
  bool closed = false;
  bool twisted = false;
};

/// Dispatch by name: cycle_graph(n), path_graph(n), complete_graph(n),
/// star(n), triangle_strip(k, closed, twisted), simplex_boundary(n),
/// torus(m, n), klein_bottle(m, n), book(pages).
SimplicialComplex generate(const std::string& name, const GeneratorParams& params);

std::vector<std::string> names();

}  // namespace disorient::generators
