#include "disorient/generators.hpp"

#include <stdexcept>

namespace disorient::generators {

namespace {

using Lists = std::vector<std::vector<VertexId>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

VertexId vid(std::size_t i) { return static_cast<VertexId>(i); }

SimplicialComplex grid_surface(std::size_t m, std::size_t n, bool flip) {
  // Row i, column j; wrapping past the last row optionally mirrors columns.
  auto at = [&](std::size_t i, std::size_t j) {
    if (i >= m) {
      i -= m;
      if (flip) j = (n - j % n) % n;
    }
    return vid(i * n + j % n);
  };
  Lists tris;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const VertexId a = at(i, j), b = at(i, j + 1), c = at(i + 1, j), d = at(i + 1, j + 1);
      tris.push_back({a, b, d});
      tris.push_back({a, c, d});
    }
  }
  return SimplicialComplex::from_maximal(tris);
}

}  // namespace

SimplicialComplex cycle_graph(std::size_t n) {
  require(n >= 3, "cycle_graph needs n >= 3");
  Lists edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({vid(i), vid((i + 1) % n)});
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex path_graph(std::size_t n) {
  require(n >= 2, "path_graph needs n >= 2 vertices");
  Lists edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({vid(i), vid(i + 1)});
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex complete_graph(std::size_t n) {
  require(n >= 2, "complete_graph needs n >= 2");
  Lists edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({vid(i), vid(j)});
  }
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  Lists edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, vid(i)});
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex triangle_strip(std::size_t k, bool closed, bool twisted) {
  require(k >= 1, "triangle_strip needs k >= 1");
  if (closed) {
    require(k >= (twisted ? 5u : 6u), twisted ? "closed twisted strip needs k >= 5"
                                              : "closed untwisted strip needs k >= 6");
  }
  // Zigzag vertex u_i sits on the top row when i is even. A straight gluing
  // maps top to top; the half turn swaps the rows.
  const bool straight = closed && ((k % 2 == 0) != twisted);
  auto u = [&](std::size_t i) -> VertexId {
    if (!closed || i < k) return vid(i);
    if (straight) return vid(i - k);
    return i == k ? 1 : 0;
  };
  Lists tris;
  for (std::size_t i = 0; i < k; ++i) tris.push_back({u(i), u(i + 1), u(i + 2)});
  return SimplicialComplex::from_maximal(tris);
}

SimplicialComplex simplex_boundary(std::size_t n) {
  require(n >= 2, "simplex_boundary needs n >= 2");
  Lists facets;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<VertexId> f;
    for (std::size_t v = 0; v <= n; ++v) {
      if (v != skip) f.push_back(vid(v));
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_maximal(facets);
}

SimplicialComplex torus(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 3, "torus needs m, n >= 3");
  return grid_surface(m, n, false);
}

SimplicialComplex klein_bottle(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 3, "klein_bottle needs m, n >= 3");
  return grid_surface(m, n, true);
}

SimplicialComplex book(std::size_t pages) {
  require(pages >= 1, "book needs at least one page");
  Lists tris;
  for (std::size_t p = 0; p < pages; ++p) tris.push_back({0, 1, vid(p + 2)});
  return SimplicialComplex::from_maximal(tris);
}

SimplicialComplex generate(const std::string& name, const GeneratorParams& p) {
  if (name == "cycle_graph") return cycle_graph(p.n);
  if (name == "path_graph") return path_graph(p.n);
  if (name == "complete_graph") return complete_graph(p.n);
  if (name == "star") return star(p.n);
  if (name == "triangle_strip") return triangle_strip(p.k, p.closed, p.twisted);
  if (name == "simplex_boundary") return simplex_boundary(p.n);
  if (name == "torus") return torus(p.m, p.n);
  if (name == "klein_bottle") return klein_bottle(p.m, p.n);
  if (name == "book") return book(p.pages);
  throw std::invalid_argument("unknown generator '" + name + "'");
}

std::vector<std::string> names() {
  return {"cycle_graph", "path_graph", "complete_graph", "star", "triangle_strip",
          "simplex_boundary", "torus", "klein_bottle", "book"};
}

}  // namespace disorient::generators
