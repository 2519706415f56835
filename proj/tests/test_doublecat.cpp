#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sdot/doublecat.hpp"

using namespace sdot;

TEST_CASE("generated family sizes") {
  auto w4 = generate_w(4);
  CHECK(w4.cat.base.num_ob == 15);
  CHECK(w4.cat.base.num_hor == 35);
  CHECK(w4.cat.base.num_ver == 35);
  CHECK(w4.cat.base.num_sq == 70);
  CHECK(w4.cat.a.size() == 5);

  auto h4 = generate_h(4);
  CHECK(h4.cat.base.num_ob == 5);
  CHECK(h4.cat.base.num_hor == 15);
  CHECK(h4.cat.base.num_ver == 5);
  CHECK(h4.cat.base.num_sq == 15);
  CHECK(h4.cat.a == std::vector<int>{h4.ob_id({0, 0})});

  auto v4 = generate_v(4);
  CHECK(v4.cat.base.num_ob == 5);
  CHECK(v4.cat.base.num_hor == 5);
  CHECK(v4.cat.base.num_ver == 15);
  CHECK(v4.cat.base.num_sq == 15);
  CHECK(v4.cat.a == std::vector<int>{v4.ob_id({4, 4})});

  auto b = generate_box(2, 3);
  CHECK(b.cat.base.num_ob == 12);
  CHECK(b.cat.base.num_hor == 30);
  CHECK(b.cat.base.num_ver == 24);
  CHECK(b.cat.base.num_sq == 60);
  CHECK(b.cat.a.empty());
}

TEST_CASE("generated instances validate") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(generate_w(n).cat.base.validate().verdict);
    CHECK(generate_h(n).cat.base.validate().verdict);
    CHECK(generate_v(n).cat.base.validate().verdict);
  }
  CHECK(generate_box(1, 2).cat.base.validate().verdict);
  CHECK(generate_box(3, 3).cat.base.validate().verdict);
}

TEST_CASE("corrupted composition table is caught") {
  auto w2 = generate_w(2);
  auto& comp = w2.cat.base.comp_hor;
  bool corrupted = false;
  for (int a = 0; a < w2.cat.base.num_hor && !corrupted; ++a)
    for (int b = 0; b < w2.cat.base.num_hor && !corrupted; ++b)
      if (comp[a][b] >= 0 && comp[a][b] != w2.cat.base.id_hor[0]) {
        comp[a][b] = w2.cat.base.id_hor[0];
        corrupted = true;
      }
  REQUIRE(corrupted);
  auto rep = w2.cat.base.validate();
  CHECK_FALSE(rep.verdict);
  CHECK(!rep.witnesses.empty());
  CHECK_THROWS_AS(w2.cat.base.require_valid(), Error);
}

TEST_CASE("index tuple lookups invert enumeration") {
  auto w3 = generate_w(3);
  for (int i = 0; i < (int)w3.ob.size(); ++i) CHECK(w3.ob_id(w3.ob[i]) == i);
  for (int i = 0; i < (int)w3.hor.size(); ++i) CHECK(w3.hor_id(w3.hor[i]) == i);
  for (int i = 0; i < (int)w3.ver.size(); ++i) CHECK(w3.ver_id(w3.ver[i]) == i);
  for (int i = 0; i < (int)w3.sq.size(); ++i) CHECK(w3.sq_id(w3.sq[i]) == i);
}

TEST_CASE("stability of the generated families") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(check_double(generate_w(n).cat, DoubleProperty::stable).verdict);
    CHECK(check_double(generate_h(n).cat, DoubleProperty::stable).verdict);
    CHECK(check_double(generate_v(n).cat, DoubleProperty::stable).verdict);
  }
  for (int q = 0; q <= 4; ++q)
    for (int r = 0; r <= 4; ++r)
      CHECK(check_double(generate_box(q, r).cat, DoubleProperty::stable)
                .verdict);
}

TEST_CASE("augmentation verdicts") {
  CHECK(check_double(generate_w(3).cat, DoubleProperty::augmented).verdict);
  CHECK(check_double(generate_h(2).cat, DoubleProperty::augmented).verdict);
  CHECK(check_double(generate_v(2).cat, DoubleProperty::augmented).verdict);

  // box(1,1) cannot be augmented by any of the 16 object subsets
  auto b = generate_box(1, 1);
  REQUIRE(b.cat.base.num_ob == 4);
  for (int mask = 0; mask < 16; ++mask) {
    AugmentedDoubleCategory cand{b.cat.base, {}};
    for (int o = 0; o < 4; ++o)
      if (mask & (1 << o)) cand.a.push_back(o);
    CHECK_FALSE(check_double(cand, DoubleProperty::augmented).verdict);
  }
}

TEST_CASE("strict augmentation separates W from H and V") {
  for (int n = 0; n <= 3; ++n)
    CHECK(strictly_augmented(generate_w(n).cat));
  for (int n = 1; n <= 3; ++n) {
    CHECK_FALSE(strictly_augmented(generate_h(n).cat));
    CHECK_FALSE(strictly_augmented(generate_v(n).cat));
  }
}

TEST_CASE("augmentation uniqueness in augmented stable instances") {
  for (int n = 0; n <= 3; ++n) {
    auto w = generate_w(n);
    const auto& b = w.cat.base;
    std::vector<bool> in_a(b.num_ob, false);
    for (int o : w.cat.a) in_a[o] = true;
    for (int o = 0; o < b.num_ob; ++o) {
      int from_a = 0, to_a = 0;
      for (int h = 0; h < b.num_hor; ++h)
        if (in_a[b.hsrc[h]] && b.htgt[h] == o) ++from_a;
      for (int v = 0; v < b.num_ver; ++v)
        if (b.vsrc[v] == o && in_a[b.vtgt[v]]) ++to_a;
      CHECK(from_a == 1);
      CHECK(to_a == 1);
    }
  }
}

TEST_CASE("functor counts against the binomial oracle") {
  for (int d = 0; d <= 2; ++d) {
    // Hom(W_0, D) is in bijection with A(D)
    auto w0 = generate_w(0);
    for (auto gen : {generate_w(d), generate_h(d), generate_v(d)})
      CHECK(hom_augmented_functors(w0.cat, gen.cat).size() ==
            gen.cat.a.size());
  }
  CHECK(hom_augmented_functors(generate_w(1).cat, generate_w(2).cat).size() ==
        6);
  CHECK(hom_augmented_functors(generate_w(2).cat, generate_w(2).cat).size() ==
        10);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 4; ++m)
      CHECK((std::int64_t)hom_augmented_functors(generate_w(n).cat,
                                                 generate_w(m).cat)
                .size() == binomial(m + n + 1, n + 1));
}

TEST_CASE("functor enumeration is deterministic and sorted") {
  auto homs = hom_augmented_functors(generate_w(1).cat, generate_w(2).cat);
  CHECK(std::is_sorted(homs.begin(), homs.end()));
  auto again = hom_augmented_functors(generate_w(1).cat, generate_w(2).cat);
  CHECK(homs == again);
}

TEST_CASE("grid sets") {
  auto w1 = generate_w(1);
  CHECK(grid_set(w1.cat.base, 0, 0).size() == (size_t)w1.cat.base.num_ob);
  CHECK(grid_set(w1.cat.base, 1, 1).size() == 5);
  CHECK(grid_set(generate_box(1, 1).cat.base, 1, 1).size() == 9);
}

TEST_CASE("grid sets are functorial in the box coordinates") {
  auto d = generate_w(1).cat.base;
  for (int q = 0; q <= 2; ++q)
    for (int r = 0; r <= 2; ++r) {
      auto bqr = generate_box(q, r);
      auto grids = grid_set(d, q, r);
      for (int q2 = 0; q2 <= 2; ++q2)
        for (int r2 = 0; r2 <= 2; ++r2) {
          auto b2 = generate_box(q2, r2);
          auto grids2 = grid_set(d, q2, r2);
          std::sort(grids2.begin(), grids2.end());
          for (const auto& f : enumerate_monotone(q2, q))
            for (const auto& g : enumerate_monotone(r2, r)) {
              auto ind = box_cosimplicial(b2, bqr, f, g);
              for (const auto& grid : grids) {
                auto restricted = compose_functors(grid, ind);
                CHECK(std::binary_search(grids2.begin(), grids2.end(),
                                         restricted));
              }
            }
        }
    }
}

TEST_CASE("w_cosimplicial is functorial") {
  auto w1 = generate_w(1);
  auto w2 = generate_w(2);
  auto w3 = generate_w(3);
  for (const auto& f : enumerate_monotone(1, 2))
    for (const auto& g : enumerate_monotone(2, 3)) {
      auto lhs = w_cosimplicial(w1, w3, compose(g, f));
      auto rhs = compose_functors(w_cosimplicial(w2, w3, g),
                                  w_cosimplicial(w1, w2, f));
      CHECK(lhs == rhs);
    }
  CHECK(w_cosimplicial(w2, w2, MonotoneMap::identity(2)).ob ==
        std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("box_to_w lands in W and splits at the window") {
  auto b = generate_box(1, 1);
  auto w3 = generate_w(3);
  auto f = box_to_w(b, 1, 1, w3);
  // objects (i,j) |-> (i, j+2)
  CHECK(f.ob[b.ob_id({0, 0})] == w3.ob_id({0, 2}));
  CHECK(f.ob[b.ob_id({1, 1})] == w3.ob_id({1, 3}));
}

TEST_CASE("search budget is enforced") {
  CHECK_THROWS_AS(hom_double_functors(generate_w(2).cat, generate_w(3).cat,
                                      true, 1),
                  Error);
}
