#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdot/monotone.hpp"

using namespace sdot;

TEST_CASE("binomial and catalan basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);

  // catalan(n) = C(2n,n)/(n+1)
  std::int64_t want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(catalan(n) == want[n]);
}

TEST_CASE("generators are the expected value vectors") {
  CHECK(MonotoneMap::coface(0, 2).v == std::vector<int>{1, 2});
  CHECK(MonotoneMap::coface(2, 2).v == std::vector<int>{0, 1});
  CHECK(MonotoneMap::codegeneracy(1, 2).v == std::vector<int>{0, 1, 1, 2});
  CHECK(MonotoneMap::alpha(3, 5).v == std::vector<int>{3});
  CHECK(MonotoneMap::beta(1, 3).v == std::vector<int>{1, 2});
  CHECK(MonotoneMap::vertex_inclusion({0, 2, 3}, 4).v ==
        std::vector<int>{0, 2, 3});
  CHECK(MonotoneMap::identity(3).is_identity());
  CHECK_FALSE(MonotoneMap::coface(0, 1).is_identity());
}

TEST_CASE("simplicial identities on cofaces and codegeneracies") {
  // d^j d^i = d^i d^{j-1} for i < j
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(MonotoneMap::coface(j, n + 1),
                      MonotoneMap::coface(i, n)) ==
              compose(MonotoneMap::coface(i, n + 1),
                      MonotoneMap::coface(j - 1, n)));
  // s^j d^j = id = s^j d^{j+1}
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= n; ++j) {
      CHECK(compose(MonotoneMap::codegeneracy(j, n),
                    MonotoneMap::coface(j, n + 1))
                .is_identity());
      CHECK(compose(MonotoneMap::codegeneracy(j, n),
                    MonotoneMap::coface(j + 1, n + 1))
                .is_identity());
    }
}

TEST_CASE("composition validates ranks") {
  MonotoneMap f(1, 2, {0, 2});
  MonotoneMap g(2, 3, {0, 1, 3});
  CHECK(compose(g, f).v == std::vector<int>{0, 3});
  CHECK_THROWS_AS(compose(f, g), Error);
}

TEST_CASE("invalid maps are rejected at construction") {
  CHECK_THROWS_AS(MonotoneMap(1, 2, {2, 0}), Error);   // not increasing
  CHECK_THROWS_AS(MonotoneMap(1, 1, {0, 2}), Error);   // out of range
  CHECK_THROWS_AS(MonotoneMap(2, 1, {0, 1}), Error);   // wrong arity
  CHECK(MonotoneMap(1, 2, {0, 2}).is_valid());
}

TEST_CASE("enumerate_monotone counts C(n+k+1, k+1) and is lex-sorted") {
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= 4; ++n) {
      auto all = enumerate_monotone(k, n);
      CHECK((std::int64_t)all.size() == binomial(n + k + 1, k + 1));
      for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].v < all[i + 1].v);
      for (size_t i = 0; i < all.size(); ++i)
        CHECK(monotone_rank(all[i]) == (int)i);
    }
}

TEST_CASE("epi-mono factorization recomposes to the original") {
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 3; ++n)
      for (const auto& theta : enumerate_monotone(k, n)) {
        auto fac = factor_epi_mono(theta);
        MonotoneMap epi = MonotoneMap::identity(k);
        for (int j : fac.epi_drops)
          epi = compose(MonotoneMap::codegeneracy(j, epi.cod - 1), epi);
        MonotoneMap mono =
            MonotoneMap::identity(n - (int)fac.mono_misses.size());
        for (auto it = fac.mono_misses.rbegin(); it != fac.mono_misses.rend();
             ++it)
          mono = compose(MonotoneMap::coface(*it, mono.cod + 1), mono);
        CHECK(compose(mono, epi) == theta);
        CHECK(mono.dom + (int)fac.epi_drops.size() == k);
        CHECK(mono.cod == n);
      }
}

TEST_CASE("error carries its code") {
  try {
    compose(MonotoneMap(1, 2, {0, 2}), MonotoneMap(0, 3, {1}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "InvalidMonotoneMap");
  }
}
