#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "disorient/disorient.hpp"
#include "disorient/dual_graph.hpp"
#include "disorient/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace disorient;

namespace {

bool is_cycle_graph(const DualGraph& g, std::size_t n) {
  if (g.vertex_count() != n || g.edges().size() != n || !g.connected()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_path_graph(const DualGraph& g, std::size_t n) {
  if (g.vertex_count() != n || g.edges().size() + 1 != n || !g.connected()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

std::size_t dual_edge(const DualGraph& g, std::size_t a, std::size_t b) {
  for (const auto& inc : g.incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  throw std::logic_error("no such edge");
}

}  // namespace

TEST_CASE("down-dual examples") {
  auto tet = generators::simplex_boundary(3);
  auto k4 = down_dual(tet, 2);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edges().size() == 6);

  auto strip = build_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(is_path_graph(down_dual(strip, 2), 3));

  CHECK(is_cycle_graph(down_dual(generators::cycle_graph(4), 1), 4));
  CHECK_THROWS_AS(down_dual(tet, 0), std::out_of_range);
  CHECK_THROWS_AS(down_dual(tet, 3), std::out_of_range);
}

TEST_CASE("down-dual edge labels are the shared faces") {
  auto tet = generators::simplex_boundary(3);
  auto g = down_dual(tet, 2);
  for (const auto& e : g.edges()) {
    const Simplex& face = tet.simplex(1, e.label);
    CHECK(tet.simplex(2, e.u).contains(face));
    CHECK(tet.simplex(2, e.v).contains(face));
  }
}

TEST_CASE("up-dual examples") {
  auto tri = build_complex({{0, 1, 2}});
  auto g = up_dual(tri, 1);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 3);
  for (const auto& e : g.edges()) CHECK(e.label == 0);

  auto two = build_complex({{0, 1}, {2, 3}});
  auto g0 = up_dual(two, 0);
  CHECK(g0.edges().size() == 2);
  CHECK(g0.component_count() == 2);

  auto tet = generators::simplex_boundary(3);
  auto g1 = up_dual(tet, 1);
  for (std::size_t v = 0; v < g1.vertex_count(); ++v) CHECK(g1.degree(v) == 4);
  CHECK_THROWS_AS(up_dual(tet, 2), std::out_of_range);
}

TEST_CASE("d-connectivity") {
  CHECK(is_d_connected(generators::simplex_boundary(3), 1));
  CHECK_FALSE(is_d_connected(build_complex({{0, 1, 2}, {3, 4, 5}}), 1));
  auto tri = build_complex({{0, 1, 2}});
  for (int d = 0; d <= 2; ++d) CHECK(is_d_connected(tri, d));
  CHECK_THROWS_AS(is_d_connected(tri, 3), std::out_of_range);
}

TEST_CASE("line graphs") {
  auto star = generators::star(3);
  auto lg = line_graph(star);
  CHECK(lg.vertex_count() == 3);
  CHECK(lg.edges().size() == 3);
  for (const auto& e : lg.edges()) CHECK(star.simplex(0, e.label) == Simplex{0});

  CHECK(is_path_graph(line_graph(generators::path_graph(4)), 3));
  for (std::size_t n = 3; n <= 12; ++n) CHECK(is_cycle_graph(line_graph(generators::cycle_graph(n)), n));
  CHECK_THROWS_AS(line_graph(generators::simplex_boundary(3)), std::invalid_argument);
}

TEST_CASE("coherence signs of small complexes") {
  auto pair = build_complex({{0, 1, 2}, {1, 2, 3}});
  auto g = signed_down_dual(pair);
  REQUIRE(g.graph.edges().size() == 1);
  CHECK(g.w(0) == Sign::minus());

  auto c3 = generators::cycle_graph(3);
  auto s3 = signed_down_dual(c3);
  const std::size_t e01 = c3.require_index(Simplex{0, 1});
  const std::size_t e12 = c3.require_index(Simplex{1, 2});
  CHECK(s3.w(dual_edge(s3.graph, e01, e12)) == Sign::plus());

  CHECK_THROWS_AS(signed_down_dual(build_complex({{0}})), std::invalid_argument);
  CHECK_THROWS_AS(signed_down_dual(pair, {Sign::plus()}), std::invalid_argument);
}

TEST_CASE("coherence signs match direct boundary expansion") {
  for (const auto& [name, k] : testing::full_corpus(100)) {
    if (k.dimension() < 1) continue;
    INFO(name);
    auto g = signed_down_dual(k);
    const int n = k.dimension();
    for (std::size_t i = 0; i < g.graph.edges().size(); ++i) {
      const auto& e = g.graph.edge(i);
      CHECK(g.w(i).value() == testing::coherence_by_expansion(k.simplex(n, e.u), k.simplex(n, e.v)));
    }
  }
}

TEST_CASE("Mobius strips are twisted, annuli are not") {
  for (std::size_t k = 5; k <= 12; ++k) {
    INFO("k = " << k);
    auto mob = signed_down_dual(generators::triangle_strip(k, true, true));
    REQUIRE(is_cycle_graph(mob.graph, k));
    Sign product = Sign::plus();
    for (auto w : mob.coherence) product *= w;
    CHECK(product == Sign::minus());
    if (k >= 6) {
      auto ann = signed_down_dual(generators::triangle_strip(k, true, false));
      REQUIRE(is_cycle_graph(ann.graph, k));
      Sign p2 = Sign::plus();
      for (auto w : ann.coherence) p2 *= w;
      CHECK(p2 == Sign::plus());
    }
  }
}

TEST_CASE("fundamental cycle examples") {
  auto tet = fundamental_cycles(signed_down_dual(generators::simplex_boundary(3)));
  REQUIRE(tet.size() == 3);
  for (const auto& c : tet) {
    CHECK(c.length == 3);
    CHECK_FALSE(c.twisted);
    CHECK_FALSE(c.branching_exempt);
    CHECK(c.violates_parity());
  }

  auto mob = fundamental_cycles(signed_down_dual(generators::triangle_strip(6, true, true)));
  REQUIRE(mob.size() == 1);
  CHECK(mob[0].length == 6);
  CHECK(mob[0].twisted);

  auto book = fundamental_cycles(signed_down_dual(generators::book(3)));
  REQUIRE(book.size() == 1);
  CHECK(book[0].length == 3);
  CHECK(book[0].branching_exempt);
  CHECK_FALSE(book[0].violates_parity());

  CHECK(fundamental_cycles(signed_down_dual(generators::path_graph(5))).empty());
}

TEST_CASE("basis size is edges - vertices + components") {
  for (const auto& [name, k] : testing::full_corpus(100)) {
    INFO(name);
    auto g = signed_down_dual(k);
    CHECK(fundamental_cycles(g).size() + g.graph.vertex_count() == g.graph.edges().size() + g.graph.component_count());
  }
}

TEST_CASE("switching a reference orientation leaves cycle products unchanged") {
  std::mt19937_64 rng(99);
  for (const auto& [name, k] : testing::full_corpus(60)) {
    INFO(name);
    const auto base = signed_down_dual(k);
    const auto base_cycles = fundamental_cycles(base);
    ReferenceOrientation ref(k.top_count(), Sign::plus());
    const std::size_t flip = std::uniform_int_distribution<std::size_t>(0, k.top_count() - 1)(rng);
    ref[flip] = Sign::minus();
    const auto flipped = signed_down_dual(k, ref);
    for (std::size_t i = 0; i < base.graph.edges().size(); ++i) {
      const auto& e = base.graph.edge(i);
      const bool incident = e.u == flip || e.v == flip;
      CHECK((flipped.w(i) == base.w(i)) == !incident);
    }
    const auto cycles = fundamental_cycles(flipped);
    REQUIRE(cycles.size() == base_cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) CHECK(cycles[i].twisted == base_cycles[i].twisted);
  }
}

TEST_CASE("line graph of a non-branching bipartite graph is bipartite") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    // Disjoint even cycles and paths, randomly relabeled.
    std::vector<std::vector<VertexId>> edges;
    VertexId next = 0;
    const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int p = 0; p < parts; ++p) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        const VertexId len = 2 * std::uniform_int_distribution<VertexId>(2, 5)(rng);
        for (VertexId i = 0; i < len; ++i) edges.push_back({next + i, next + (i + 1) % len});
        next += len;
      } else {
        const VertexId len = std::uniform_int_distribution<VertexId>(2, 8)(rng);
        for (VertexId i = 0; i + 1 < len; ++i) edges.push_back({next + i, next + i + 1});
        next += len;
      }
    }
    std::vector<VertexId> perm(next);
    for (VertexId i = 0; i < next; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : edges) {
      for (auto& v : e) v = perm[v];
    }
    auto g = build_complex(edges);
    REQUIRE(is_bipartite_combinatorial(g).bipartite);
    REQUIRE_FALSE(branching_report(g).any_branching());
    CHECK(is_bipartite_combinatorial(line_graph(g)).bipartite);
  }
}

TEST_CASE("branching faces produce same-label cycles of every length 3..degree") {
  for (const auto& [name, k] : testing::full_corpus(100)) {
    INFO(name);
    const int n = k.dimension();
    auto g = signed_down_dual(k);
    for (const auto& f : branching_report(k).faces) {
      if (!f.branching) continue;
      auto cof = k.coface_indices(n - 1, f.face);
      for (std::size_t len = 3; len <= cof.size(); ++len) {
        std::vector<std::size_t> vertices(cof.begin(), cof.begin() + static_cast<std::ptrdiff_t>(len));
        std::vector<std::size_t> edges;
        for (std::size_t i = 0; i < len; ++i) {
          std::size_t e = dual_edge(g.graph, vertices[i], vertices[(i + 1) % len]);
          CHECK(g.graph.edge(e).label == f.face);
          edges.push_back(e);
        }
        auto c = classify_cycle(g, vertices, edges);
        CHECK(c.branching_exempt);
        // Sign propagation is consistent around any single-face cycle, so the
        // coherence product alternates with length.
        CHECK(c.w_product.value() == (len % 2 == 0 ? 1 : -1));
        CHECK_FALSE(c.violates_parity());
      }
    }
  }
}
