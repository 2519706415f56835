#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sdot/json_io.hpp"
#include "sdot/preaug.hpp"
#include "sdot/waldhausen.hpp"

using namespace sdot;

namespace {

// an index-preserving level-wise bijection exists among the natural maps
bool isomorphic(const PreaugBisimplicialSet& a, const PreaugBisimplicialSet& b) {
  if (a.depth != b.depth || a.card_m1 != b.card_m1) return false;
  for (int k = 0; k <= a.depth; ++k)
    for (int l = 0; l <= a.depth; ++l)
      if (a.card[k][l] != b.card[k][l]) return false;
  auto injective = [](const std::vector<int>& f, int cod) {
    std::vector<bool> hit(cod, false);
    for (int v : f) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  for (const auto& phi : hom_preaug(a, b)) {
    bool bij = injective(phi.component_m1, b.card_m1);
    for (int k = 0; k <= a.depth && bij; ++k)
      for (int l = 0; l <= a.depth && bij; ++l)
        bij = injective(phi.component[k][l], b.card[k][l]);
    if (bij) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("representables") {
  auto s11 = representable(1, 1, 2);
  s11.validate();
  CHECK(s11.card[0][0] == 4);
  CHECK(s11.card[1][1] == 9);
  CHECK(s11.card[2][2] == 16);
  CHECK(s11.card_m1 == 0);

  auto s00 = representable(0, 0, 2);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) CHECK(s00.card[k][l] == 1);
  CHECK(s00.card_m1 == 0);

  auto sm1 = representable_minus_one(2);
  sm1.validate();
  CHECK(sm1.card_m1 == 1);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) CHECK(sm1.card[k][l] == 1);
}

TEST_CASE("W[n] chain counts") {
  auto w1 = generate_w_preaug(1, 2);
  w1.y.validate();
  CHECK(w1.y.card[0][0] == 3);
  CHECK(w1.y.card[1][0] == 4);
  CHECK(w1.y.card[1][1] == 5);
  CHECK(w1.y.card_m1 == 2);

  // chains i_0<=...<=i_k<=j_0<=...<=j_l<=n count C(n+k+l+2, k+l+2)
  for (int n = 0; n <= 3; ++n) {
    auto w = generate_w_preaug(n, 2);
    CHECK(w.y.card_m1 == n + 1);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l)
        CHECK((std::int64_t)w.y.card[k][l] ==
              binomial(n + k + l + 2, k + l + 2));
  }
}

TEST_CASE("chain index round trip") {
  auto w2 = generate_w_preaug(2, 2);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int x = 0; x < w2.y.card[k][l]; ++x)
        CHECK(w2.chain_index(k, l, w2.chains[k][l][x]) == x);
}

TEST_CASE("H[n] and V[n]") {
  auto h0 = generate_h_preaug(0, 2);
  CHECK(paug_to_json(h0) == paug_to_json(representable_minus_one(2)));

  auto h2 = generate_h_preaug(2, 2);
  h2.validate();
  CHECK(h2.card[0][1] == 6);
  CHECK(h2.card_m1 == 1);
  // H[n]_{k,l} only depends on l: |mono([l] -> [n])|
  for (int n = 0; n <= 3; ++n) {
    auto h = generate_h_preaug(n, 2);
    auto v = generate_v_preaug(n, 2);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        CHECK((std::int64_t)h.card[k][l] == binomial(n + l + 1, l + 1));
        CHECK((std::int64_t)v.card[k][l] == binomial(n + k + 1, k + 1));
      }
    CHECK(h.card_m1 == 1);
    CHECK(v.card_m1 == 1);
  }
}

TEST_CASE("pushout of representables") {
  // gluing two copies of Sigma[0,0] along itself gives Sigma[0,0] back
  auto a = representable(0, 0, 2);
  PreaugMap id;
  id.source = &a;
  id.target = &a;
  id.component.assign(3, std::vector<std::vector<int>>(3, {0}));
  id.component_m1 = {};
  auto res = preaug_pushout(a, a, a, id, id);
  res.object.validate();
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) CHECK(res.object.card[k][l] == 1);
  res.from_b.validate();
  res.from_c.validate();
}

TEST_CASE("augmented nerve of W_1") {
  auto nerve = augmented_nerve(generate_w(1).cat, 2);
  nerve.y.validate();
  CHECK(nerve.y.card[0][0] == 3);
  CHECK(nerve.y.card_m1 == 2);
}

TEST_CASE("nerve comparison with the explicit generators") {
  for (int n = 0; n <= 2; ++n) {
    CHECK(isomorphic(generate_w_preaug(n, 2).y,
                     augmented_nerve(generate_w(n).cat, 2).y));
    CHECK(isomorphic(generate_h_preaug(n, 2),
                     augmented_nerve(generate_h(n).cat, 2).y));
    CHECK(isomorphic(generate_v_preaug(n, 2),
                     augmented_nerve(generate_v(n).cat, 2).y));
  }
}

TEST_CASE("underlying bisimplicial part of the nerve is the grid sets") {
  for (int n = 0; n <= 2; ++n) {
    auto w = generate_w(n);
    auto nerve = grid_nerve(w.cat, 2);
    for (int q = 0; q <= 2; ++q)
      for (int r = 0; r <= 2; ++r)
        CHECK((size_t)nerve.y.card[q][r] ==
              grid_set(w.cat.base, q, r).size());
  }
}

TEST_CASE("augmented nerve refuses non-augmented input") {
  auto b = generate_box(1, 1);
  try {
    augmented_nerve(b.cat, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == "NotStableOrAugmented");
  }
  // grid_nerve still works on it
  auto nerve = grid_nerve(b.cat, 1);
  CHECK(nerve.y.card[1][1] == 9);
  CHECK(nerve.y.card_m1 == 0);
}

TEST_CASE("predicate checks on standard objects") {
  auto nw2 = augmented_nerve(generate_w(2).cat, 2).y;
  CHECK(check_preaug(nw2, PreaugProperty::double_segal).verdict);
  CHECK(check_preaug(nw2, PreaugProperty::stable_baby).verdict);
  CHECK(check_preaug(nw2, PreaugProperty::stable_full).verdict);
  CHECK(check_preaug(nw2, PreaugProperty::augmented_baby).verdict);
  CHECK(check_preaug(nw2, PreaugProperty::augmented_full).verdict);

  auto s11 = representable(1, 1, 2);
  CHECK_FALSE(check_preaug(s11, PreaugProperty::augmented_baby).verdict);

  auto z2 = nerve_of_category(FiniteCategory::cyclic_group(2), 5).object;
  auto pz2 = path_construction(z2);
  CHECK(check_preaug(pz2, PreaugProperty::split).verdict);
  CHECK(check_preaug(pz2, PreaugProperty::double_segal).verdict);

  auto nh1 = augmented_nerve(generate_h(1).cat, 2).y;
  CHECK(check_preaug(nh1, PreaugProperty::pointed).verdict);
}

TEST_CASE("H[n] and V[n] are double Segal and stable but not augmented") {
  for (int n = 1; n <= 2; ++n) {
    auto h = generate_h_preaug(n, 2);
    CHECK(check_preaug(h, PreaugProperty::double_segal).verdict);
    CHECK(check_preaug(h, PreaugProperty::stable_full).verdict);
    CHECK_FALSE(check_preaug(h, PreaugProperty::augmented_baby).verdict);
    CHECK_FALSE(check_preaug(h, PreaugProperty::augmented_full).verdict);
  }
}

TEST_CASE("Yoneda for hom_preaug") {
  auto y = generate_w_preaug(1, 2).y;
  for (int q = 0; q <= 2; ++q)
    for (int r = 0; r <= 2; ++r)
      CHECK((int)hom_preaug(representable(q, r, 2), y).size() ==
            y.card[q][r]);
  CHECK((int)hom_preaug(representable_minus_one(2), y).size() == y.card_m1);
}

TEST_CASE("hom_preaug matches full faithfulness of the nerve") {
  CHECK(hom_preaug(generate_w_preaug(1, 2).y,
                   augmented_nerve(generate_w(1).cat, 2).y)
            .size() == 3);

  std::vector<GeneratedDouble> corpus;
  for (int n = 0; n <= 2; ++n) {
    corpus.push_back(generate_w(n));
    corpus.push_back(generate_h(n));
    corpus.push_back(generate_v(n));
  }
  for (const auto& s : corpus)
    for (const auto& d : corpus) {
      auto ns = grid_nerve(s.cat, 2);
      auto nd = grid_nerve(d.cat, 2);
      CHECK(hom_preaug(ns.y, nd.y).size() ==
            hom_augmented_functors(s.cat, d.cat).size());
    }
}

TEST_CASE("level symmetry for augmented stable double Segal objects") {
  std::vector<PreaugBisimplicialSet> ys;
  for (int n = 0; n <= 2; ++n) {
    ys.push_back(generate_w_preaug(n, 2).y);
    ys.push_back(generate_h_preaug(n, 2));
    ys.push_back(generate_v_preaug(n, 2));
  }
  ys.push_back(path_construction(standard_simplex(2, 5)));
  for (const auto& y : ys) {
    if (!check_preaug(y, PreaugProperty::double_segal).verdict) continue;
    if (!check_preaug(y, PreaugProperty::stable_baby).verdict) continue;
    if (!check_preaug(y, PreaugProperty::augmented_baby).verdict) continue;
    CHECK(y.card[1][0] == y.card[0][1]);
  }
}

TEST_CASE("truncation stability of the generators") {
  CHECK(paug_to_json(generate_w_preaug(2, 2).y.truncated(1)) ==
        paug_to_json(generate_w_preaug(2, 1).y));
  CHECK(paug_to_json(generate_h_preaug(2, 2).truncated(1)) ==
        paug_to_json(generate_h_preaug(2, 1)));
  CHECK(paug_to_json(generate_v_preaug(2, 2).truncated(1)) ==
        paug_to_json(generate_v_preaug(2, 1)));
  CHECK(paug_to_json(representable(1, 1, 3).truncated(2)) ==
        paug_to_json(representable(1, 1, 2)));
}

TEST_CASE("map validation catches broken naturality") {
  auto y = generate_w_preaug(1, 1).y;
  auto homs = hom_preaug(representable(0, 0, 1), y);
  REQUIRE(!homs.empty());
  auto phi = homs.front();
  phi.component[1][1][0] = (phi.component[1][1][0] + 1) % y.card[1][1];
  bool ok = true;
  try {
    phi.validate();
  } catch (const Error&) {
    ok = false;
  }
  CHECK_FALSE(ok);
}
