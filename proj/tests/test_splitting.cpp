#include <set>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "disorient/generators.hpp"
#include "disorient/splitting.hpp"
#include "support/corpus.hpp"

using namespace disorient;

TEST_CASE("find_conflict") {
  CHECK_FALSE(find_conflict(build_complex({{0, 1, 2}, {1, 2, 3}})).has_value());
  CHECK_FALSE(find_conflict(build_complex({{0, 1, 2}})).has_value());
  auto c = find_conflict(generators::simplex_boundary(3));
  REQUIRE(c.has_value());
  CHECK(c->a.contains(c->face));
  CHECK(c->b.contains(c->face));
  CHECK(c->a != c->b);
}

TEST_CASE("subdividing an edge of a single triangle") {
  auto k = build_complex({{0, 1, 2}});
  auto [after, step] = subdivide_edge(k, Simplex{0, 1});
  CHECK(step.new_vertex == 3);
  CHECK(step.affected_top_simplices == std::vector<Simplex>{Simplex{0, 1, 2}});
  CHECK(after.top_simplices() == std::vector<Simplex>{Simplex{0, 2, 3}, Simplex{1, 2, 3}});
  CHECK(after.contains(Simplex{2, 3}));
  CHECK_FALSE(after.contains(Simplex{0, 1}));
}

TEST_CASE("subdividing a graph edge gives a path") {
  auto [after, step] = subdivide_edge(build_complex({{0, 1}}), Simplex{0, 1});
  CHECK(after.top_simplices() == std::vector<Simplex>{Simplex{0, 2}, Simplex{1, 2}});
}

TEST_CASE("subdividing an edge of the tetrahedron boundary splits its two cofaces") {
  auto k = generators::simplex_boundary(3);
  auto [after, step] = subdivide_edge(k, Simplex{1, 2});
  CHECK(step.affected_top_simplices.size() == 2);
  CHECK(after.top_count() == 6);
  CHECK_THROWS_AS(subdivide_edge(k, Simplex{0, 7}), std::invalid_argument);
  CHECK_THROWS_AS(subdivide_edge(k, Simplex{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("subdivision soundness on the corpus") {
  for (const auto& [name, k] : testing::full_corpus(100)) {
    INFO(name);
    const Simplex e = k.simplex(1, k.count(1) / 2);
    std::size_t top_cofaces = 0;
    for (const auto& t : k.top_simplices()) top_cofaces += t.contains(e);
    auto [after, step] = subdivide_edge(k, e);
    CHECK(after.top_count() == k.top_count() + top_cofaces);
    CHECK(step.affected_top_simplices.size() == top_cofaces);
    CHECK(after.vertex_count() == k.vertex_count() + 1);
    for (int d = 1; d <= after.dimension(); ++d) {
      for (const auto& s : after.simplices(d)) CHECK_FALSE(s.contains(e));
    }
    CHECK(verify_topology_preserved(k, after));
  }
}

TEST_CASE("subdividing a boundary edge lengthens the strip cycle by one, keeping its twist") {
  for (std::size_t len = 5; len <= 10; ++len) {
    for (bool twisted : {false, true}) {
      if (!twisted && len < 6) continue;
      INFO(len << (twisted ? " twisted" : " untwisted"));
      auto k = generators::triangle_strip(len, true, twisted);
      // A boundary edge belongs to exactly one triangle.
      std::optional<Simplex> boundary;
      for (std::size_t i = 0; i < k.count(1) && !boundary; ++i) {
        if (k.degree(1, i) == 1) boundary = k.simplex(1, i);
      }
      REQUIRE(boundary);
      auto before = fundamental_cycles(signed_down_dual(k));
      auto [after, step] = subdivide_edge(k, *boundary);
      auto cycles = fundamental_cycles(signed_down_dual(after));
      REQUIRE(before.size() == 1);
      REQUIRE(cycles.size() == 1);
      CHECK(cycles[0].length == len + 1);
      CHECK(cycles[0].twisted == before[0].twisted);
    }
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    auto k = generators::cycle_graph(n);
    auto [after, step] = subdivide_edge(k, Simplex{0, 1});
    auto cycles = fundamental_cycles(signed_down_dual(after));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length == n + 1);
    CHECK_FALSE(cycles[0].twisted);
  }
}

TEST_CASE("repairing C_3 gives C_4") {
  auto r = make_disorientable(generators::cycle_graph(3));
  CHECK(r.log.iterations == 1);
  CHECK(r.complex.top_count() == 4);
  CHECK(is_bipartite_combinatorial(r.complex).bipartite);
  CHECK(verify_topology_preserved(generators::cycle_graph(3), r.complex));
}

TEST_CASE("repairing the even Mobius strip") {
  auto k = generators::triangle_strip(6, true, true);
  auto r = make_disorientable(k);
  CHECK(check_disorientable(r.complex).disorientable());
  CHECK(brute_force_disorientable(r.complex).disorientable());
  auto cycles = fundamental_cycles(signed_down_dual(r.complex));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].twisted);
  CHECK(cycles[0].odd());
  CHECK(betti_numbers(r.complex) == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("repairing the tetrahedron boundary splits all four triangles") {
  auto k = generators::simplex_boundary(3);
  auto r = make_disorientable(k);
  CHECK(r.log.iterations == 2);
  CHECK(r.log.total_top_simplices_split == 4);
  std::set<Simplex> split;
  for (const auto& s : r.log.steps) split.insert(s.affected_top_simplices.begin(), s.affected_top_simplices.end());
  for (const auto& t : k.top_simplices()) CHECK(split.count(t) == 1);
  CHECK(r.complex.top_count() == 8);
  CHECK(check_disorientable(r.complex).disorientable());
  CHECK(brute_force_disorientable(r.complex).disorientable());
  CHECK(betti_numbers(r.complex) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("already disorientable input is returned unchanged") {
  auto k = generators::cycle_graph(6);
  auto r = make_disorientable(k);
  CHECK(r.log.steps.empty());
  CHECK(r.complex.top_simplices() == k.top_simplices());
}

TEST_CASE("iteration cap") {
  try {
    make_disorientable(generators::simplex_boundary(3), 1);
    FAIL("expected the cap to trigger");
  } catch (const IterationCapExceeded& e) {
    CHECK(e.log().iterations == 1);
    CHECK(e.partial().top_count() == 6);
  }
  CHECK_THROWS_AS(make_disorientable(build_complex({{0}})), std::invalid_argument);
  CHECK_THROWS_AS(make_disorientable(generators::cycle_graph(3), 0), std::invalid_argument);
}

TEST_CASE("choose_split_edge takes the edge through the opposite vertex with fewest cofaces") {
  auto k = generators::triangle_strip(6, true, true);
  // Triangle {0,1,2} meets {1,2,3} across {1,2}; its opposite vertex is 0.
  auto e = choose_split_edge(k, Simplex{0, 1, 2}, Simplex{1, 2});
  CHECK(e.contains(VertexId{0}));
  std::size_t cof = 0;
  for (const auto& t : k.top_simplices()) cof += t.contains(e);
  CHECK(cof == 1);
}

TEST_CASE("repair on the corpus") {
  for (const auto& [name, k] : testing::full_corpus(200)) {
    INFO(name);
    auto r = make_disorientable(k);
    CHECK(check_disorientable(r.complex).disorientable());
    if (r.complex.top_count() <= kBruteForceCap) CHECK(brute_force_disorientable(r.complex).disorientable());
    CHECK(verify_topology_preserved(k, r.complex));
    CHECK(r.log.iterations <= 10 * k.top_count());
  }
}
