// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sdot/json_io.hpp"

using namespace sdot;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  if (secs > budget_seconds) {
    ok = false;
    note += " (over budget)";
  }
  if (!ok) ++failures;
  std::printf("criterion %d [%s]: %s (%.2fs, budget %.0fs)%s\n", number,
              label.c_str(), ok ? "PASS" : "FAIL", secs, budget_seconds,
              note.c_str());
  std::fflush(stdout);
}

bool injective(const std::vector<int>& f, int cod) {
  std::vector<bool> hit(cod, false);
  for (int v : f) {
    if (v < 0 || v >= cod || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// levels agree in size and some natural map is a level-wise bijection
bool isomorphic(const PreaugBisimplicialSet& a, const PreaugBisimplicialSet& b) {
  if (a.depth != b.depth || a.card_m1 != b.card_m1) return false;
  for (int k = 0; k <= a.depth; ++k)
    for (int l = 0; l <= a.depth; ++l)
      if (a.card[k][l] != b.card[k][l]) return false;
  for (const auto& phi : hom_preaug(a, b)) {
    bool bij = injective(phi.component_m1, b.card_m1);
    for (int k = 0; k <= a.depth && bij; ++k)
      for (int l = 0; l <= a.depth && bij; ++l)
        bij = injective(phi.component[k][l], b.card[k][l]);
    if (bij) return true;
  }
  return false;
}

std::vector<TruncatedSimplicialSet> simplicial_corpus(int depth) {
  std::vector<TruncatedSimplicialSet> out;
  for (int n = 0; n <= 4; ++n) out.push_back(standard_simplex(n, depth));
  for (int n = 0; n <= 3; ++n)
    out.push_back(nerve_of_category(FiniteCategory::linear(n), depth).object);
  out.push_back(nerve_of_category(FiniteCategory::cyclic_group(2), depth).object);
  out.push_back(
      nerve_of_category(FiniteCategory::commutative_square(), depth).object);
  return out;
}

}  // namespace

int main() {
  criterion(1, "path construction of simplices", 1.0, [] {
    for (int n = 0; n <= 4; ++n)
      if (paug_to_json(path_construction(standard_simplex(n, 5))) !=
          paug_to_json(generate_w_preaug(n, 2).y))
        return false;
    return true;
  });

  criterion(2, "augmented nerve of W_n and H_n", 10.0, [] {
    for (int n = 0; n <= 3; ++n) {
      if (!isomorphic(generate_w_preaug(n, 2).y,
                      augmented_nerve(generate_w(n).cat, 2).y))
        return false;
      if (!isomorphic(generate_h_preaug(n, 2),
                      augmented_nerve(generate_h(n).cat, 2).y))
        return false;
    }
    return true;
  });

  criterion(3, "unit round trip on unital 2-Segal corpus", 30.0, [] {
    for (const auto& x : simplicial_corpus(7))
      if (!unit_map(x, 3).all_bijective) return false;
    return true;
  });

  criterion(4, "counit round trip on nerves", 60.0, [] {
    for (int n = 0; n <= 3; ++n) {
      auto rw = roundtrip_double(generate_w(n).cat, 3);
      if (!rw.theorem_expected || !rw.all_bijective) return false;
      // H_n / V_n are not strictly augmented; the report must run, be
      // bijective at level -1, and say the theorem expectation is not met
      for (auto rep : {roundtrip_double(generate_h(n).cat, 3),
                       roundtrip_double(generate_v(n).cat, 3)}) {
        if (rep.levels.empty() || rep.levels.front().first != "-1" ||
            !rep.levels.front().second)
          return false;
        if (n >= 1 && (rep.theorem_expected || rep.all_bijective))
          return false;
      }
    }
    return true;
  });

  criterion(5, "reduced criteria agree with full ones", 120.0, [] {
    int objects = 0;
    for (const auto& x : simplicial_corpus(5)) {
      ++objects;
      bool tf = check_simplicial(x, SimplicialProperty::twosegal_full, 5).verdict;
      bool tr =
          check_simplicial(x, SimplicialProperty::twosegal_reduced, 5).verdict;
      if (tf != tr) return false;
      if (tf) {
        bool uf = check_simplicial(x, SimplicialProperty::unital_full, 5).verdict;
        bool ur =
            check_simplicial(x, SimplicialProperty::unital_reduced, 2).verdict;
        if (uf != ur) return false;
      }
    }
    std::vector<PreaugBisimplicialSet> ys;
    for (int n = 0; n <= 2; ++n) {
      ys.push_back(generate_w_preaug(n, 2).y);
      ys.push_back(generate_h_preaug(n, 2));
      ys.push_back(generate_v_preaug(n, 2));
    }
    ys.push_back(representable(1, 1, 2));
    ys.push_back(path_construction(standard_simplex(3, 5)));
    ys.push_back(path_construction(
        nerve_of_category(FiniteCategory::cyclic_group(2), 5).object));
    for (const auto& y : ys) {
      ++objects;
      if (!check_preaug(y, PreaugProperty::double_segal).verdict) continue;
      if (check_preaug(y, PreaugProperty::stable_baby).verdict !=
          check_preaug(y, PreaugProperty::stable_full).verdict)
        return false;
      if (check_preaug(y, PreaugProperty::augmented_baby).verdict !=
          check_preaug(y, PreaugProperty::augmented_full).verdict)
        return false;
    }
    return objects >= 20;
  });

  criterion(6, "counting oracles", 30.0, [] {
    for (int n = 0; n <= 5; ++n) {
      auto d = standard_simplex(n, 5);
      for (int k = 0; k <= 5; ++k)
        if ((std::int64_t)d.card[k] != binomial(n + k + 1, k + 1)) return false;
    }
    for (int n = 2; n <= 8; ++n)
      if ((std::int64_t)enumerate_triangulations(n).size() != catalan(n - 1))
        return false;
    auto w4 = generate_w(4);
    if (w4.cat.base.num_ob != 15 || w4.cat.base.num_hor != 35 ||
        w4.cat.base.num_ver != 35 || w4.cat.base.num_sq != 70)
      return false;
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; n + m <= 5; ++m)
        if ((std::int64_t)hom_augmented_functors(generate_w(n).cat,
                                                 generate_w(m).cat)
                .size() != binomial(m + n + 1, n + 1))
          return false;
    return true;
  });

  criterion(7, "nerve levels are the grid sets", 10.0, [] {
    for (int n = 0; n <= 2; ++n)
      for (auto gen : {generate_w(n), generate_h(n), generate_v(n)}) {
        auto nerve = grid_nerve(gen.cat, 2);
        for (int q = 0; q <= 2; ++q)
          for (int r = 0; r <= 2; ++r)
            if ((size_t)nerve.y.card[q][r] !=
                grid_set(gen.cat.base, q, r).size())
              return false;
      }
    // for the strictly augmented W family the grid sets also agree with the
    // augmented functor sets out of W_{q+1+r}
    for (int n = 0; n <= 2; ++n)
      for (int q = 0; q <= 1; ++q)
        for (int r = 0; r <= 1; ++r)
          if (grid_set(generate_w(n).cat.base, q, r).size() !=
              hom_augmented_functors(generate_w(q + 1 + r).cat,
                                     generate_w(n).cat)
                  .size())
            return false;
    return true;
  });

  criterion(8, "negative controls", 5.0, [] {
    auto sq = subcomplex_of_delta(3, 2, {{1, 3}, {1, 2, 3}, {0, 1, 3}});
    auto rep = check_simplicial(sq.object, SimplicialProperty::segal, 2);
    if (rep.verdict || rep.witnesses.empty()) return false;
    const auto& w = rep.witnesses.front();
    if (w.preimages != 0 || w.element.size() != 2) return false;
    if (sq.codec.values(1, w.element[0]) != std::vector<int>{0, 1} ||
        sq.codec.values(1, w.element[1]) != std::vector<int>{1, 2})
      return false;

    auto b = generate_box(1, 1);
    for (int mask = 0; mask < 16; ++mask) {
      AugmentedDoubleCategory cand{b.cat.base, {}};
      for (int o = 0; o < 4; ++o)
        if (mask & (1 << o)) cand.a.push_back(o);
      if (check_double(cand, DoubleProperty::augmented).verdict) return false;
    }

    return !check_preaug(representable(1, 1, 2), PreaugProperty::augmented_baby)
                .verdict;
  });

  criterion(9, "adjunction triangle identities", 60.0, [] {
    for (const auto& x : simplicial_corpus(5))
      if (!triangle_identity_pathside(x, 2)) return false;
    std::vector<PreaugBisimplicialSet> ys;
    for (int n = 0; n <= 2; ++n) {
      ys.push_back(generate_w_preaug(n, 2).y);
      ys.push_back(generate_h_preaug(n, 2));
      ys.push_back(generate_v_preaug(n, 2));
    }
    ys.push_back(augmented_nerve(generate_w(2).cat, 2).y);
    ys.push_back(path_construction(standard_simplex(3, 5)));
    ys.push_back(path_construction(
        nerve_of_category(FiniteCategory::cyclic_group(2), 5).object));
    for (const auto& y : ys)
      if (!triangle_identity_sdotside(y, 2)) return false;
    return true;
  });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
