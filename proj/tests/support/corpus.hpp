// Test corpus: every generator instance named by the acceptance criteria plus
// seeded random complexes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "disorient/complex.hpp"
#include "disorient/generators.hpp"

namespace disorient::testing {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

/// Relabels vertices to [0, n) preserving their order, so sorted orientations
/// are unchanged.
inline std::vector<std::vector<VertexId>> compact(std::vector<std::vector<VertexId>> lists) {
  std::set<VertexId> used;
  for (const auto& l : lists) used.insert(l.begin(), l.end());
  std::map<VertexId, VertexId> rank;
  for (auto v : used) rank.emplace(v, static_cast<VertexId>(rank.size()));
  for (auto& l : lists) {
    for (auto& v : l) v = rank.at(v);
  }
  return lists;
}

/// Random complex of dimension `dim` with up to `max_top` top simplices drawn
/// from a small vertex pool (small pools give many shared faces), plus an
/// occasional lower-dimensional maximal simplex.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int dim, std::size_t max_top = 12) {
  std::uniform_int_distribution<std::size_t> top_dist(1, max_top);
  std::uniform_int_distribution<std::size_t> pool_dist(static_cast<std::size_t>(dim) + 2,
                                                       static_cast<std::size_t>(dim) + 5);
  const std::size_t pool = pool_dist(rng);
  const std::size_t want = top_dist(rng);
  std::vector<VertexId> verts(pool);
  for (std::size_t i = 0; i < pool; ++i) verts[i] = static_cast<VertexId>(i);

  std::set<std::vector<VertexId>> tops;
  for (std::size_t attempt = 0; attempt < 8 * want && tops.size() < want; ++attempt) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<VertexId> s(verts.begin(), verts.begin() + dim + 1);
    std::sort(s.begin(), s.end());
    tops.insert(s);
  }
  std::vector<std::vector<VertexId>> lists(tops.begin(), tops.end());
  if (dim >= 2 && std::bernoulli_distribution(0.2)(rng)) {
    // A dangling edge to a fresh vertex.
    lists.push_back({verts[0], static_cast<VertexId>(pool)});
  }
  return SimplicialComplex::from_maximal(compact(std::move(lists)));
}

inline std::vector<NamedComplex> generator_corpus() {
  namespace g = generators;
  std::vector<NamedComplex> out;
  auto add = [&](std::string name, SimplicialComplex k) { out.push_back({std::move(name), std::move(k)}); };
  for (std::size_t n = 3; n <= 10; ++n) add("cycle_graph(" + std::to_string(n) + ")", g::cycle_graph(n));
  for (std::size_t n = 2; n <= 10; ++n) add("path_graph(" + std::to_string(n) + ")", g::path_graph(n));
  for (std::size_t n = 1; n <= 10; ++n) add("star(" + std::to_string(n) + ")", g::star(n));
  for (std::size_t n = 2; n <= 6; ++n) add("complete_graph(" + std::to_string(n) + ")", g::complete_graph(n));
  for (std::size_t k = 1; k <= 10; ++k) {
    for (bool closed : {false, true}) {
      for (bool twisted : {false, true}) {
        if (closed && k < (twisted ? 5u : 6u)) continue;
        add("triangle_strip(" + std::to_string(k) + (closed ? ",closed" : ",open") +
                (twisted ? ",twisted)" : ",untwisted)"),
            g::triangle_strip(k, closed, twisted));
      }
    }
  }
  for (std::size_t n = 2; n <= 4; ++n) add("simplex_boundary(" + std::to_string(n) + ")", g::simplex_boundary(n));
  for (std::size_t p = 3; p <= 5; ++p) add("book(" + std::to_string(p) + ")", g::book(p));
  add("torus(3,3)", g::torus(3, 3));
  add("klein_bottle(3,3)", g::klein_bottle(3, 3));
  return out;
}

inline std::vector<NamedComplex> random_corpus(std::size_t count, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::vector<NamedComplex> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int dim = 1 + static_cast<int>(i % 3);
    out.push_back({"random#" + std::to_string(i) + "(dim " + std::to_string(dim) + ")", random_complex(rng, dim)});
  }
  return out;
}

inline std::vector<NamedComplex> full_corpus(std::size_t random_count = 500) {
  auto out = generator_corpus();
  for (auto& r : random_corpus(random_count)) out.push_back(std::move(r));
  return out;
}

}  // namespace disorient::testing
