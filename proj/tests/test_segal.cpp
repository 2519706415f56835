#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdot/segal.hpp"

using namespace sdot;

namespace {

SubcomplexResult square_delta_p(int depth) {
  return subcomplex_of_delta(3, depth, {{1, 3}, {1, 2, 3}, {0, 1, 3}});
}

std::vector<TruncatedSimplicialSet> corpus(int depth) {
  std::vector<TruncatedSimplicialSet> out;
  for (int n = 0; n <= 4; ++n) out.push_back(standard_simplex(n, depth));
  out.push_back(nerve_of_category(FiniteCategory::cyclic_group(2), depth).object);
  out.push_back(nerve_of_category(FiniteCategory::cyclic_group(3), depth).object);
  out.push_back(nerve_of_category(FiniteCategory::linear(2), depth).object);
  out.push_back(
      nerve_of_category(FiniteCategory::commutative_square(), depth).object);
  out.push_back(square_delta_p(depth).object);
  out.push_back(
      subcomplex_of_delta(4, depth, {{0, 1, 2}, {0, 2, 3, 4}}).object);
  return out;
}

}  // namespace

TEST_CASE("standard simplices are Segal") {
  CHECK(check_simplicial(standard_simplex(4, 5), SimplicialProperty::segal, 4)
            .verdict);
  CHECK(check_simplicial(standard_simplex(2, 3), SimplicialProperty::segal, 3)
            .verdict);
}

TEST_CASE("square Delta[P] fails Segal with the spine witness") {
  auto sq = square_delta_p(2);
  auto rep = check_simplicial(sq.object, SimplicialProperty::segal, 2);
  CHECK_FALSE(rep.verdict);
  REQUIRE(!rep.witnesses.empty());
  const auto& w = rep.witnesses.front();
  CHECK(w.level == 2);
  CHECK(w.context == "spine");
  CHECK(w.preimages == 0);
  REQUIRE(w.element.size() == 2);
  // the composable pair of edges 0->1, 1->2 has no filler
  CHECK(sq.codec.values(1, w.element[0]) == std::vector<int>{0, 1});
  CHECK(sq.codec.values(1, w.element[1]) == std::vector<int>{1, 2});
}

TEST_CASE("nerve of Z/2 is 2-Segal and unital") {
  auto z2 = nerve_of_category(FiniteCategory::cyclic_group(2), 5).object;
  CHECK(check_simplicial(z2, SimplicialProperty::twosegal_full, 5).verdict);
  CHECK(check_simplicial(z2, SimplicialProperty::unital_full, 5).verdict);
  CHECK(check_simplicial(z2, SimplicialProperty::segal, 5).verdict);
}

TEST_CASE("unitality of standard simplices") {
  CHECK(check_simplicial(standard_simplex(3, 3),
                         SimplicialProperty::unital_full, 3)
            .verdict);
  CHECK(check_simplicial(standard_simplex(3, 3),
                         SimplicialProperty::unital_reduced, 2)
            .verdict);
}

TEST_CASE("reduced predicate counts vertices") {
  CHECK_FALSE(check_simplicial(standard_simplex(1, 1),
                               SimplicialProperty::reduced, 0)
                  .verdict);
  auto z2 = nerve_of_category(FiniteCategory::cyclic_group(2), 2).object;
  CHECK(check_simplicial(z2, SimplicialProperty::reduced, 0).verdict);
}

TEST_CASE("full and reduced 2-Segal criteria agree on the corpus") {
  for (const auto& x : corpus(5)) {
    bool full =
        check_simplicial(x, SimplicialProperty::twosegal_full, 5).verdict;
    bool red =
        check_simplicial(x, SimplicialProperty::twosegal_reduced, 5).verdict;
    CHECK(full == red);
  }
}

TEST_CASE("full and reduced unitality agree on 2-Segal corpus objects") {
  for (const auto& x : corpus(5)) {
    if (!check_simplicial(x, SimplicialProperty::twosegal_full, 5).verdict)
      continue;
    bool full =
        check_simplicial(x, SimplicialProperty::unital_full, 5).verdict;
    bool red =
        check_simplicial(x, SimplicialProperty::unital_reduced, 2).verdict;
    CHECK(full == red);
  }
}

TEST_CASE("Segal implies 2-Segal on the corpus") {
  for (const auto& x : corpus(5)) {
    if (!check_simplicial(x, SimplicialProperty::segal, 5).verdict) continue;
    CHECK(check_simplicial(x, SimplicialProperty::twosegal_full, 5).verdict);
  }
}

TEST_CASE("verdict false iff witnesses non-empty, with failure counts") {
  for (const auto& x : corpus(4))
    for (auto p : {SimplicialProperty::segal, SimplicialProperty::twosegal_full,
                   SimplicialProperty::unital_full}) {
      auto rep = check_simplicial(x, p, 4);
      CHECK(rep.verdict == rep.witnesses.empty());
      if (!rep.verdict) CHECK(rep.failure_count >= 1);
    }
}

TEST_CASE("depth accounting") {
  auto d2 = standard_simplex(2, 2);
  CHECK_THROWS_AS(check_simplicial(d2, SimplicialProperty::segal, 3), Error);
  CHECK_THROWS_AS(check_simplicial(d2, SimplicialProperty::twosegal_full, 2),
                  Error);
  try {
    check_simplicial(d2, SimplicialProperty::twosegal_full, 3);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "DepthTooSmall");
  }
}
