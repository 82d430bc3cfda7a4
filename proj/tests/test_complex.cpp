#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "disorient/complex.hpp"
#include "support/corpus.hpp"

using namespace disorient;

TEST_CASE("closure of a single triangle") {
  auto k = build_complex({{0, 1, 2}});
  CHECK(k.dimension() == 2);
  CHECK(k.count(2) == 1);
  CHECK(k.count(1) == 3);
  CHECK(k.count(0) == 3);
}

TEST_CASE("a list of edges is a graph") {
  auto k = build_complex({{0, 1}, {1, 2}, {0, 2}});
  CHECK(k.dimension() == 1);
  CHECK(k.count(1) == 3);
  CHECK(k.count(0) == 3);
}

TEST_CASE("two triangles sharing an edge") {
  auto k = build_complex({{0, 1, 2}, {1, 2, 3}});
  CHECK(k.count(2) == 2);
  CHECK(k.count(1) == 5);
  CHECK(k.count(0) == 4);
  CHECK(cofaces(k, Simplex{1, 2}) == std::vector<Simplex>{Simplex{0, 1, 2}, Simplex{1, 2, 3}});
  CHECK(k.degree(1, k.require_index(Simplex{1, 2})) == 2);
}

TEST_CASE("duplicates and absorbed faces") {
  auto k = build_complex({{0, 1, 2}, {2, 1, 0}, {0, 1}, {2}});
  CHECK(k.count(2) == 1);
  CHECK(k.maximal_simplices() == std::vector<Simplex>{Simplex{0, 1, 2}});
  CHECK(k.lower_dimensional_maximal().empty());
}

TEST_CASE("mixed dimensions are kept and reported") {
  auto k = build_complex({{0, 1, 2}, {2, 3}});
  CHECK(k.dimension() == 2);
  CHECK(k.lower_dimensional_maximal() == std::vector<Simplex>{Simplex{2, 3}});
}

TEST_CASE("build_complex errors") {
  CHECK_THROWS_AS(build_complex({}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({{0, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({{}}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({{0, 2}}), std::invalid_argument);  // id 1 missing
}

TEST_CASE("cofaces of a facet of a single triangle and of a branching edge") {
  auto tri = build_complex({{0, 1, 2}});
  for (const auto& e : tri.simplices(1)) CHECK(cofaces(tri, e).size() == 1);
  auto book = generators::book(3);
  CHECK(cofaces(book, Simplex{0, 1}).size() == 3);
  auto report = branching_report(book);
  CHECK(report.face_dimension == 1);
  CHECK(report.branching_count() == 1);
  CHECK(report.faces[book.require_index(Simplex{0, 1})].branching);
  CHECK_THROWS_AS(cofaces(tri, Simplex{0, 5}), std::out_of_range);
}

TEST_CASE("branching means degree above two") {
  for (const auto& [name, k] : testing::generator_corpus()) {
    INFO(name);
    for (const auto& f : branching_report(k).faces) CHECK(f.branching == (f.degree > 2));
  }
}

TEST_CASE("closure and face/coface duality on the corpus") {
  for (const auto& [name, k] : testing::full_corpus(100)) {
    INFO(name);
    for (int d = 1; d <= k.dimension(); ++d) {
      for (std::size_t i = 0; i < k.count(d); ++i) {
        const Simplex& s = k.simplex(d, i);
        auto fs = faces(s);
        auto fi = k.face_indices(d, i);
        REQUIRE(fi.size() == fs.size());
        for (std::size_t j = 0; j < fs.size(); ++j) {
          REQUIRE(k.contains(fs[j]));
          CHECK(k.simplex(d - 1, fi[j]) == fs[j]);
          auto cof = k.coface_indices(d - 1, fi[j]);
          CHECK(std::find(cof.begin(), cof.end(), i) != cof.end());
        }
      }
      for (std::size_t f = 0; f < k.count(d - 1); ++f) {
        for (auto c : k.coface_indices(d - 1, f)) CHECK(k.simplex(d, c).contains(k.simplex(d - 1, f)));
      }
    }
    for (std::size_t v = 0; v < k.vertex_count(); ++v) CHECK(k.simplex(0, v) == Simplex{static_cast<VertexId>(v)});
  }
}
