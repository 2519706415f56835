#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sdot/polygon.hpp"

using namespace sdot;

TEST_CASE("triangulation counts are Catalan numbers") {
  for (int n = 2; n <= 8; ++n)
    CHECK((std::int64_t)enumerate_triangulations(n).size() == catalan(n - 1));
}

TEST_CASE("triangulations have n-2 diagonals and n-1 triangles") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      CHECK((int)t.diagonals.size() == n - 2);
      CHECK((int)t.maximal_polygons.size() == n - 1);
      for (const auto& face : t.maximal_polygons) CHECK(face.size() == 3);
    }
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  auto ts = enumerate_triangulations(5);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (size_t i = 0; i < ts.size(); ++i) {
    CHECK(seen.insert(ts[i].diagonals).second);
    if (i) CHECK(ts[i - 1].diagonals < ts[i].diagonals);
  }
}

TEST_CASE("paper square decomposition validates") {
  auto p = validate_decomposition(3, {{1, 3}, {1, 2, 3}, {0, 1, 3}});
  CHECK(p.n == 3);
  CHECK(p.diagonals == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(p.maximal_polygons ==
        std::vector<std::vector<int>>{{0, 1, 3}, {1, 2, 3}});
}

TEST_CASE("crossing diagonals rejected") {
  try {
    decomposition_from_diagonals(3, {{0, 2}, {1, 3}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "CrossingDiagonals");
  }
}

TEST_CASE("missing intersection rejected") {
  try {
    validate_decomposition(3, {{0, 1, 3}, {1, 2, 3}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "NotIntersectionClosed");
  }
}

TEST_CASE("family not covering the polygon rejected") {
  try {
    validate_decomposition(3, {{0, 1, 3}, {1, 3}});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "NotCovering");
  }
}

TEST_CASE("trivial decomposition") {
  auto p = trivial_decomposition(4);
  CHECK(p.diagonals.empty());
  CHECK(p.maximal_polygons == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("initial and final triangle decompositions") {
  for (int n = 3; n <= 7; ++n) {
    auto init = initial_triangle_decomposition(n);
    CHECK(init.diagonals == std::vector<std::pair<int, int>>{{0, 2}});
    std::vector<int> rest{0};
    for (int v = 2; v <= n; ++v) rest.push_back(v);
    CHECK(init.maximal_polygons ==
          std::vector<std::vector<int>>{{0, 1, 2}, rest});

    auto fin = final_triangle_decomposition(n);
    CHECK(fin.diagonals == std::vector<std::pair<int, int>>{{n - 2, n}});
    std::vector<int> head;
    for (int v = 0; v <= n - 2; ++v) head.push_back(v);
    head.push_back(n);
    CHECK(fin.maximal_polygons ==
          std::vector<std::vector<int>>{head, {n - 2, n - 1, n}});
  }
}

TEST_CASE("derived polygon family is intersection closed") {
  auto p = decomposition_from_diagonals(5, {{0, 2}, {2, 4}, {0, 4}});
  for (const auto& a : p.polygons)
    for (const auto& b : p.polygons) {
      std::vector<int> inter;
      for (int v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) inter.push_back(v);
      if (inter.size() >= 2)
        CHECK(std::find(p.polygons.begin(), p.polygons.end(), inter) !=
              p.polygons.end());
    }
  for (const auto& poly : p.polygons) CHECK(poly.size() >= 2);
}
