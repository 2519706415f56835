#include "sdot/segal.hpp"

#include <algorithm>
#include <map>

#include "sdot/polygon.hpp"

namespace sdot {

SimplicialProperty simplicial_property_from_string(const std::string& s) {
  if (s == "segal") return SimplicialProperty::segal;
  if (s == "twosegal_full") return SimplicialProperty::twosegal_full;
  if (s == "twosegal_reduced") return SimplicialProperty::twosegal_reduced;
  if (s == "unital_full") return SimplicialProperty::unital_full;
  if (s == "unital_reduced") return SimplicialProperty::unital_reduced;
  if (s == "reduced") return SimplicialProperty::reduced;
  throw Error("InvalidArgument", "unknown property " + s);
}

std::string to_string(SimplicialProperty p) {
  switch (p) {
    case SimplicialProperty::segal: return "segal";
    case SimplicialProperty::twosegal_full: return "twosegal_full";
    case SimplicialProperty::twosegal_reduced: return "twosegal_reduced";
    case SimplicialProperty::unital_full: return "unital_full";
    case SimplicialProperty::unital_reduced: return "unital_reduced";
    case SimplicialProperty::reduced: return "reduced";
  }
  return "?";
}

FiberMapCheck check_fiber_bijection(
    int domain_card,
    const std::vector<int>& leg_a, const std::vector<int>& leg_b,
    int card_a, int card_b,
    const std::vector<int>& f_a, const std::vector<int>& f_b) {
  std::map<std::pair<int, int>, int> hits;
  for (int a = 0; a < card_a; ++a)
    for (int b = 0; b < card_b; ++b)
      if (f_a[a] == f_b[b]) hits[{a, b}] = 0;
  FiberMapCheck r;
  for (int x = 0; x < domain_card; ++x) {
    auto it = hits.find({leg_a[x], leg_b[x]});
    if (it == hits.end()) throw Error("Internal", "fiber map misses fiber product");
    ++it->second;
  }
  for (const auto& [pr, count] : hits)
    if (count != 1) {
      r.bijective = false;
      r.bad.push_back({{pr.first, pr.second}, count});
    }
  return r;
}

namespace {

void add_witnesses(CheckReport& rep, int level, const std::string& ctx,
                   const FiberMapCheck& c) {
  if (c.bijective) return;
  rep.failure_count += static_cast<int>(c.bad.size());
  if (rep.witnesses.empty())
    rep.witnesses.push_back({level, ctx, c.bad[0].first, c.bad[0].second});
}

// map per element of X_{src_level} given by act of theta
std::vector<int> act_table(const TruncatedSimplicialSet& x, const MonotoneMap& th) {
  std::vector<int> out(x.card[th.cod]);
  for (int e = 0; e < x.card[th.cod]; ++e) out[e] = x.act(th, e);
  return out;
}

void check_segal(const TruncatedSimplicialSet& x, int up_to, CheckReport& rep) {
  for (int n = 2; n <= up_to; ++n) {
    // limit tuples (e_1..e_n) in X_1^n with d_0 e_i = d_1 e_{i+1}
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == n) {
        tuples.push_back(cur);
        return;
      }
      for (int e = 0; e < x.card[1]; ++e) {
        if (!cur.empty() && x.face[1][0][cur.back()] != x.face[1][1][e]) continue;
        cur.push_back(e);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    std::map<std::vector<int>, int> hits;
    for (const auto& t : tuples) hits[t] = 0;
    for (int e = 0; e < x.card[n]; ++e) {
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i)
        t[i] = x.act(MonotoneMap::beta(i, n), e);
      ++hits.at(t);
    }
    FiberMapCheck c;
    for (const auto& [t, count] : hits)
      if (count != 1) {
        c.bijective = false;
        c.bad.push_back({t, count});
      }
    add_witnesses(rep, n, "spine", c);
  }
}

void check_twosegal_full(const TruncatedSimplicialSet& x, int up_to,
                         CheckReport& rep) {
  for (int n = 3; n <= up_to; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      auto ps = p_segal_map(x, t);
      if (ps.bijective) continue;
      std::map<int, int> hits;
      for (size_t i = 0; i < ps.limit.size(); ++i) hits[static_cast<int>(i)] = 0;
      for (int v : ps.to_limit) ++hits[v];
      FiberMapCheck c;
      for (const auto& [idx, count] : hits)
        if (count != 1) {
          c.bijective = false;
          c.bad.push_back({ps.limit[idx], count});
        }
      add_witnesses(rep, n, "T=" + t.diagonal_string(), c);
    }
}

void check_twosegal_reduced(const TruncatedSimplicialSet& x, int up_to,
                            CheckReport& rep) {
  for (int n = 3; n <= up_to; ++n) {
    // X_n -> X_{012} x_{X_{02}} X_{02...n}
    {
      std::vector<int> verts02n{0};
      for (int v = 2; v <= n; ++v) verts02n.push_back(v);
      auto legA = act_table(x, MonotoneMap::vertex_inclusion({0, 1, 2}, n));
      auto legB = act_table(x, MonotoneMap::vertex_inclusion(verts02n, n));
      auto fA = act_table(x, MonotoneMap(1, 2, {0, 2}));
      auto fB = act_table(x, MonotoneMap(1, n - 1, {0, 1}));
      auto c = check_fiber_bijection(x.card[n], legA, legB, x.card[2],
                                     x.card[n - 1], fA, fB);
      add_witnesses(rep, n, "initial-triangle", c);
    }
    // X_n -> X_{(n-2)(n-1)n} x_{X_{(n-2)n}} X_{0...(n-2),n}
    {
      std::vector<int> head;
      for (int v = 0; v <= n - 2; ++v) head.push_back(v);
      head.push_back(n);
      auto legA =
          act_table(x, MonotoneMap::vertex_inclusion({n - 2, n - 1, n}, n));
      auto legB = act_table(x, MonotoneMap::vertex_inclusion(head, n));
      auto fA = act_table(x, MonotoneMap(1, 2, {0, 2}));
      auto fB = act_table(x, MonotoneMap(1, n - 1, {n - 2, n - 1}));
      auto c = check_fiber_bijection(x.card[n], legA, legB, x.card[2],
                                     x.card[n - 1], fA, fB);
      add_witnesses(rep, n, "final-triangle", c);
    }
  }
}

void check_unital_full(const TruncatedSimplicialSet& x, int up_to,
                       CheckReport& rep) {
  for (int n = 2; n <= up_to; ++n)
    for (int i = 0; i <= n - 1; ++i) {
      // X_{n-1} -> X_n x_{X_1} X_0, x |-> (s_i x, alpha_i x);
      // fiber over beta_i : X_n -> X_1 and s_0 : X_0 -> X_1
      std::vector<int> legA(x.card[n - 1]), legB(x.card[n - 1]);
      for (int e = 0; e < x.card[n - 1]; ++e) {
        legA[e] = x.deg[n - 1][i][e];
        legB[e] = x.act(MonotoneMap::alpha(i, n - 1), e);
      }
      auto fA = act_table(x, MonotoneMap::beta(i, n));
      std::vector<int> fB(x.card[0]);
      for (int e = 0; e < x.card[0]; ++e) fB[e] = x.deg[0][0][e];
      auto c = check_fiber_bijection(x.card[n - 1], legA, legB, x.card[n],
                                     x.card[0], fA, fB);
      add_witnesses(rep, n, "unital(n=" + std::to_string(n) +
                                ",i=" + std::to_string(i) + ")",
                    c);
    }
}

void check_unital_reduced(const TruncatedSimplicialSet& x, CheckReport& rep) {
  // square 1: X_1 -> X_2 x_{X_1} X_0, x |-> (s_1 x, d_0 x), fiber d_0(y)=s_0(z)
  {
    std::vector<int> legA(x.card[1]), legB(x.card[1]);
    for (int e = 0; e < x.card[1]; ++e) {
      legA[e] = x.deg[1][1][e];
      legB[e] = x.face[1][0][e];
    }
    std::vector<int> fA = x.face[2][0];
    std::vector<int> fB(x.card[0]);
    for (int e = 0; e < x.card[0]; ++e) fB[e] = x.deg[0][0][e];
    auto c = check_fiber_bijection(x.card[1], legA, legB, x.card[2], x.card[0],
                                   fA, fB);
    add_witnesses(rep, 2, "unital-reduced-1", c);
  }
  // square 2: X_1 -> X_2 x_{X_1} X_0, x |-> (s_0 x, d_1 x), fiber d_2(y)=s_0(z)
  {
    std::vector<int> legA(x.card[1]), legB(x.card[1]);
    for (int e = 0; e < x.card[1]; ++e) {
      legA[e] = x.deg[1][0][e];
      legB[e] = x.face[1][1][e];
    }
    std::vector<int> fA = x.face[2][2];
    std::vector<int> fB(x.card[0]);
    for (int e = 0; e < x.card[0]; ++e) fB[e] = x.deg[0][0][e];
    auto c = check_fiber_bijection(x.card[1], legA, legB, x.card[2], x.card[0],
                                   fA, fB);
    add_witnesses(rep, 2, "unital-reduced-2", c);
  }
}

}  // namespace

CheckReport check_simplicial(const TruncatedSimplicialSet& x,
                             SimplicialProperty property, int up_to) {
  CheckReport rep;
  rep.property = to_string(property);
  if (property == SimplicialProperty::reduced) {
    rep.verdict = (x.card[0] == 1);
    if (!rep.verdict) {
      rep.failure_count = 1;
      rep.witnesses.push_back({0, "|X_0|=" + std::to_string(x.card[0]), {}, 0});
    }
    return rep;
  }
  int min_depth = 0;
  switch (property) {
    case SimplicialProperty::segal: min_depth = 2; break;
    case SimplicialProperty::twosegal_full:
    case SimplicialProperty::twosegal_reduced: min_depth = 3; break;
    case SimplicialProperty::unital_full:
    case SimplicialProperty::unital_reduced: min_depth = 2; break;
    default: break;
  }
  if (up_to < min_depth || x.depth < up_to)
    throw Error("DepthTooSmall", "check_simplicial needs depth >= " +
                                     std::to_string(std::max(min_depth, up_to)));
  switch (property) {
    case SimplicialProperty::segal: check_segal(x, up_to, rep); break;
    case SimplicialProperty::twosegal_full: check_twosegal_full(x, up_to, rep); break;
    case SimplicialProperty::twosegal_reduced:
      check_twosegal_reduced(x, up_to, rep);
      break;
    case SimplicialProperty::unital_full: check_unital_full(x, up_to, rep); break;
    case SimplicialProperty::unital_reduced: check_unital_reduced(x, rep); break;
    default: break;
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

}  // namespace sdot
