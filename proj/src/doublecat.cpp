#include "sdot/doublecat.hpp"

#include <algorithm>
#include <tuple>

namespace sdot {

namespace {

void witness(CheckReport& rep, int level, const std::string& ctx,
             std::vector<int> elt, int preimages) {
  ++rep.failure_count;
  if (rep.witnesses.empty())
    rep.witnesses.push_back({level, ctx, std::move(elt), preimages});
}

}  // namespace

CheckReport DoubleCategory::validate() const {
  CheckReport rep;
  rep.property = "double_category_axioms";
  auto bad = [&](const std::string& ctx, std::vector<int> elt) {
    witness(rep, 0, ctx, std::move(elt), 0);
  };

  for (int h = 0; h < num_hor; ++h)
    if (hsrc[h] < 0 || hsrc[h] >= num_ob || htgt[h] < 0 || htgt[h] >= num_ob)
      bad("hor endpoints", {h});
  for (int v = 0; v < num_ver; ++v)
    if (vsrc[v] < 0 || vsrc[v] >= num_ob || vtgt[v] < 0 || vtgt[v] >= num_ob)
      bad("ver endpoints", {v});
  for (int s = 0; s < num_sq; ++s) {
    int top = sq_sv[s], bot = sq_tv[s], left = sq_sh[s], right = sq_th[s];
    if (vsrc[left] != hsrc[top] || vsrc[right] != htgt[top] ||
        vtgt[left] != hsrc[bot] || vtgt[right] != htgt[bot])
      bad("square corners", {s});
  }
  for (int o = 0; o < num_ob; ++o) {
    if (hsrc[id_hor[o]] != o || htgt[id_hor[o]] != o) bad("id_hor endpoints", {o});
    if (vsrc[id_ver[o]] != o || vtgt[id_ver[o]] != o) bad("id_ver endpoints", {o});
  }
  for (int v = 0; v < num_ver; ++v) {
    int s = id_sq_hor[v];
    if (sq_sh[s] != v || sq_th[s] != v || sq_sv[s] != id_hor[vsrc[v]] ||
        sq_tv[s] != id_hor[vtgt[v]])
      bad("id_sq_hor boundary", {v});
  }
  for (int h = 0; h < num_hor; ++h) {
    int s = id_sq_ver[h];
    if (sq_sv[s] != h || sq_tv[s] != h || sq_sh[s] != id_ver[hsrc[h]] ||
        sq_th[s] != id_ver[htgt[h]])
      bad("id_sq_ver boundary", {h});
  }

  // composability totality + composite boundaries
  auto check_comp1 = [&](const std::vector<std::vector<int>>& comp, int count,
                         const std::vector<int>& src, const std::vector<int>& tgt,
                         const char* ctx) {
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b) {
        int c = comp[a][b];
        if (tgt[a] != src[b]) {
          if (c != -1) bad(std::string(ctx) + " spurious", {a, b});
          continue;
        }
        if (c < 0 || c >= count || src[c] != src[a] || tgt[c] != tgt[b])
          bad(std::string(ctx) + " composite boundary", {a, b});
      }
  };
  check_comp1(comp_hor, num_hor, hsrc, htgt, "comp_hor");
  check_comp1(comp_ver, num_ver, vsrc, vtgt, "comp_ver");
  if (!rep.witnesses.empty()) {  // boundary data broken; stop before lookups misfire
    rep.verdict = false;
    return rep;
  }

  for (int a = 0; a < num_sq; ++a)
    for (int b = 0; b < num_sq; ++b) {
      int c = comp_sq_hor[a][b];
      if (sq_th[a] != sq_sh[b]) {
        if (c != -1) bad("comp_sq_hor spurious", {a, b});
      } else if (c < 0 || c >= num_sq || sq_sh[c] != sq_sh[a] ||
                 sq_th[c] != sq_th[b] ||
                 sq_sv[c] != comp_hor[sq_sv[a]][sq_sv[b]] ||
                 sq_tv[c] != comp_hor[sq_tv[a]][sq_tv[b]]) {
        bad("comp_sq_hor boundary", {a, b});
      }
      c = comp_sq_ver[a][b];
      if (sq_tv[a] != sq_sv[b]) {
        if (c != -1) bad("comp_sq_ver spurious", {a, b});
      } else if (c < 0 || c >= num_sq || sq_sv[c] != sq_sv[a] ||
                 sq_tv[c] != sq_tv[b] ||
                 sq_sh[c] != comp_ver[sq_sh[a]][sq_sh[b]] ||
                 sq_th[c] != comp_ver[sq_th[a]][sq_th[b]]) {
        bad("comp_sq_ver boundary", {a, b});
      }
    }

  // unit laws
  for (int h = 0; h < num_hor; ++h)
    if (comp_hor[id_hor[hsrc[h]]][h] != h || comp_hor[h][id_hor[htgt[h]]] != h)
      bad("hor unit", {h});
  for (int v = 0; v < num_ver; ++v)
    if (comp_ver[id_ver[vsrc[v]]][v] != v || comp_ver[v][id_ver[vtgt[v]]] != v)
      bad("ver unit", {v});
  for (int s = 0; s < num_sq; ++s) {
    if (comp_sq_hor[id_sq_hor[sq_sh[s]]][s] != s ||
        comp_sq_hor[s][id_sq_hor[sq_th[s]]] != s)
      bad("sq hor unit", {s});
    if (comp_sq_ver[id_sq_ver[sq_sv[s]]][s] != s ||
        comp_sq_ver[s][id_sq_ver[sq_tv[s]]] != s)
      bad("sq ver unit", {s});
  }
  // identities of identities agree
  for (int o = 0; o < num_ob; ++o)
    if (id_sq_hor[id_ver[o]] != id_sq_ver[id_hor[o]]) bad("double identity", {o});
  // identity squares compose to identity squares
  for (int a = 0; a < num_ver; ++a)
    for (int b = 0; b < num_ver; ++b)
      if (vtgt[a] == vsrc[b] &&
          comp_sq_ver[id_sq_hor[a]][id_sq_hor[b]] != id_sq_hor[comp_ver[a][b]])
        bad("id_sq_hor functoriality", {a, b});
  for (int a = 0; a < num_hor; ++a)
    for (int b = 0; b < num_hor; ++b)
      if (htgt[a] == hsrc[b] &&
          comp_sq_hor[id_sq_ver[a]][id_sq_ver[b]] != id_sq_ver[comp_hor[a][b]])
        bad("id_sq_ver functoriality", {a, b});

  // associativity
  auto assoc = [&](const std::vector<std::vector<int>>& comp, int count,
                   const std::vector<int>& src, const std::vector<int>& tgt,
                   const char* ctx) {
    for (int a = 0; a < count; ++a)
      for (int b = 0; b < count; ++b) {
        if (tgt[a] != src[b]) continue;
        for (int c = 0; c < count; ++c) {
          if (tgt[b] != src[c]) continue;
          if (comp[comp[a][b]][c] != comp[a][comp[b][c]])
            bad(std::string(ctx) + " associativity", {a, b, c});
        }
      }
  };
  assoc(comp_hor, num_hor, hsrc, htgt, "hor");
  assoc(comp_ver, num_ver, vsrc, vtgt, "ver");
  assoc(comp_sq_hor, num_sq, sq_sh, sq_th, "sq hor");
  assoc(comp_sq_ver, num_sq, sq_sv, sq_tv, "sq ver");

  // interchange on 2x2 grids
  for (int a = 0; a < num_sq; ++a)
    for (int b = 0; b < num_sq; ++b) {
      if (sq_th[a] != sq_sh[b]) continue;
      for (int c = 0; c < num_sq; ++c) {
        if (sq_tv[a] != sq_sv[c]) continue;
        for (int d = 0; d < num_sq; ++d) {
          if (sq_th[c] != sq_sh[d] || sq_tv[b] != sq_sv[d]) continue;
          int rows = comp_sq_ver[comp_sq_hor[a][b]][comp_sq_hor[c][d]];
          int cols = comp_sq_hor[comp_sq_ver[a][c]][comp_sq_ver[b][d]];
          if (rows != cols) bad("interchange", {a, b, c, d});
        }
      }
    }

  rep.verdict = rep.witnesses.empty();
  return rep;
}

void DoubleCategory::require_valid() const {
  CheckReport rep = validate();
  if (!rep.verdict)
    throw Error("InvalidDoubleCategory", rep.witnesses[0].context);
}

DoubleKind double_kind_from_string(const std::string& s) {
  if (s == "W") return DoubleKind::W;
  if (s == "H") return DoubleKind::H;
  if (s == "V") return DoubleKind::V;
  if (s == "box") return DoubleKind::box;
  throw Error("InvalidArgument", "unknown double-category kind " + s);
}

namespace {

template <typename T>
int lookup(const std::vector<T>& v, const T& t) {
  auto it = std::lower_bound(v.begin(), v.end(), t);
  if (it == v.end() || *it != t) throw Error("Internal", "tuple lookup");
  return static_cast<int>(it - v.begin());
}

// Shared table builder: all generated families use the same index-merge
// formulas; only the tuple sets differ.
GeneratedDouble build_generated(std::vector<std::array<int, 2>> ob,
                                std::vector<std::array<int, 3>> hor,
                                std::vector<std::array<int, 3>> ver,
                                std::vector<std::array<int, 4>> sq,
                                std::vector<std::array<int, 2>> aug) {
  GeneratedDouble g;
  std::sort(ob.begin(), ob.end());
  std::sort(hor.begin(), hor.end());
  std::sort(ver.begin(), ver.end());
  std::sort(sq.begin(), sq.end());
  g.ob = std::move(ob);
  g.hor = std::move(hor);
  g.ver = std::move(ver);
  g.sq = std::move(sq);

  DoubleCategory& d = g.cat.base;
  d.num_ob = static_cast<int>(g.ob.size());
  d.num_hor = static_cast<int>(g.hor.size());
  d.num_ver = static_cast<int>(g.ver.size());
  d.num_sq = static_cast<int>(g.sq.size());

  for (const auto& [i, j, l] : g.hor) {
    d.hsrc.push_back(g.ob_id({i, j}));
    d.htgt.push_back(g.ob_id({i, l}));
  }
  for (const auto& [i, k, j] : g.ver) {
    d.vsrc.push_back(g.ob_id({i, j}));
    d.vtgt.push_back(g.ob_id({k, j}));
  }
  for (const auto& [i, k, j, l] : g.sq) {
    d.sq_sv.push_back(g.hor_id({i, j, l}));
    d.sq_tv.push_back(g.hor_id({k, j, l}));
    d.sq_sh.push_back(g.ver_id({i, k, j}));
    d.sq_th.push_back(g.ver_id({i, k, l}));
  }
  for (const auto& [i, j] : g.ob) {
    d.id_hor.push_back(g.hor_id({i, j, j}));
    d.id_ver.push_back(g.ver_id({i, i, j}));
  }
  for (const auto& [i, k, j] : g.ver) d.id_sq_hor.push_back(g.sq_id({i, k, j, j}));
  for (const auto& [i, j, l] : g.hor) d.id_sq_ver.push_back(g.sq_id({i, i, j, l}));

  d.comp_hor.assign(d.num_hor, std::vector<int>(d.num_hor, -1));
  for (int a = 0; a < d.num_hor; ++a)
    for (int b = 0; b < d.num_hor; ++b)
      if (d.htgt[a] == d.hsrc[b])
        d.comp_hor[a][b] = g.hor_id({g.hor[a][0], g.hor[a][1], g.hor[b][2]});
  d.comp_ver.assign(d.num_ver, std::vector<int>(d.num_ver, -1));
  for (int a = 0; a < d.num_ver; ++a)
    for (int b = 0; b < d.num_ver; ++b)
      if (d.vtgt[a] == d.vsrc[b])
        d.comp_ver[a][b] = g.ver_id({g.ver[a][0], g.ver[b][1], g.ver[a][2]});
  d.comp_sq_hor.assign(d.num_sq, std::vector<int>(d.num_sq, -1));
  d.comp_sq_ver.assign(d.num_sq, std::vector<int>(d.num_sq, -1));
  for (int a = 0; a < d.num_sq; ++a)
    for (int b = 0; b < d.num_sq; ++b) {
      if (d.sq_th[a] == d.sq_sh[b])
        d.comp_sq_hor[a][b] =
            g.sq_id({g.sq[a][0], g.sq[a][1], g.sq[a][2], g.sq[b][3]});
      if (d.sq_tv[a] == d.sq_sv[b])
        d.comp_sq_ver[a][b] =
            g.sq_id({g.sq[a][0], g.sq[b][1], g.sq[a][2], g.sq[a][3]});
    }

  for (const auto& t : aug) g.cat.a.push_back(g.ob_id(t));
  std::sort(g.cat.a.begin(), g.cat.a.end());
  return g;
}

}  // namespace

int GeneratedDouble::ob_id(std::array<int, 2> t) const { return lookup(ob, t); }
int GeneratedDouble::hor_id(std::array<int, 3> t) const { return lookup(hor, t); }
int GeneratedDouble::ver_id(std::array<int, 3> t) const { return lookup(ver, t); }
int GeneratedDouble::sq_id(std::array<int, 4> t) const { return lookup(sq, t); }

GeneratedDouble generate_w(int n) {
  if (n < 0) throw Error("InvalidArgument", "generate_w");
  std::vector<std::array<int, 2>> ob, aug;
  std::vector<std::array<int, 3>> hor, ver;
  std::vector<std::array<int, 4>> sq;
  for (int i = 0; i <= n; ++i) {
    aug.push_back({i, i});
    for (int j = i; j <= n; ++j) {
      ob.push_back({i, j});
      for (int l = j; l <= n; ++l) hor.push_back({i, j, l});
      for (int k = i; k <= j; ++k) {
        ver.push_back({i, k, j});
        for (int l = j; l <= n; ++l) sq.push_back({i, k, j, l});
      }
    }
  }
  return build_generated(ob, hor, ver, sq, aug);
}

GeneratedDouble generate_h(int n) {
  if (n < 0) throw Error("InvalidArgument", "generate_h");
  std::vector<std::array<int, 2>> ob;
  std::vector<std::array<int, 3>> hor, ver;
  std::vector<std::array<int, 4>> sq;
  for (int j = 0; j <= n; ++j) {
    ob.push_back({0, j});
    ver.push_back({0, 0, j});
    for (int l = j; l <= n; ++l) {
      hor.push_back({0, j, l});
      sq.push_back({0, 0, j, l});
    }
  }
  return build_generated(ob, hor, ver, sq, {{0, 0}});
}

GeneratedDouble generate_v(int n) {
  if (n < 0) throw Error("InvalidArgument", "generate_v");
  std::vector<std::array<int, 2>> ob;
  std::vector<std::array<int, 3>> hor, ver;
  std::vector<std::array<int, 4>> sq;
  for (int i = 0; i <= n; ++i) {
    ob.push_back({i, n});
    hor.push_back({i, n, n});
    for (int k = i; k <= n; ++k) {
      ver.push_back({i, k, n});
      sq.push_back({i, k, n, n});
    }
  }
  return build_generated(ob, hor, ver, sq, {{n, n}});
}

GeneratedDouble generate_box(int q, int r) {
  if (q < 0 || r < 0) throw Error("InvalidArgument", "generate_box");
  std::vector<std::array<int, 2>> ob;
  std::vector<std::array<int, 3>> hor, ver;
  std::vector<std::array<int, 4>> sq;
  for (int i = 0; i <= q; ++i)
    for (int j = 0; j <= r; ++j) {
      ob.push_back({i, j});
      for (int l = j; l <= r; ++l) hor.push_back({i, j, l});
      for (int k = i; k <= q; ++k) {
        ver.push_back({i, k, j});
        for (int l = j; l <= r; ++l) sq.push_back({i, k, j, l});
      }
    }
  return build_generated(ob, hor, ver, sq, {});
}

CheckReport check_double(const AugmentedDoubleCategory& d, DoubleProperty p) {
  d.base.require_valid();
  const DoubleCategory& b = d.base;
  CheckReport rep;
  if (p == DoubleProperty::stable) {
    rep.property = "stable";
    std::map<std::pair<int, int>, int> spans, cospans;
    for (int h = 0; h < b.num_hor; ++h)
      for (int v = 0; v < b.num_ver; ++v) {
        if (b.hsrc[h] == b.vsrc[v]) spans[{h, v}] = 0;
        if (b.htgt[h] == b.vtgt[v]) cospans[{h, v}] = 0;
      }
    for (int s = 0; s < b.num_sq; ++s) {
      ++spans.at({b.sq_sv[s], b.sq_sh[s]});
      ++cospans.at({b.sq_tv[s], b.sq_th[s]});
    }
    for (const auto& [k, c] : spans)
      if (c != 1) witness(rep, 0, "span-to-square", {k.first, k.second}, c);
    for (const auto& [k, c] : cospans)
      if (c != 1) witness(rep, 0, "cospan-to-square", {k.first, k.second}, c);
  } else {
    rep.property = "augmented";
    std::vector<char> in_a(b.num_ob, 0);
    for (int o : d.a) in_a[o] = 1;
    std::vector<int> from_a(b.num_ob, 0), to_a(b.num_ob, 0);
    for (int h = 0; h < b.num_hor; ++h)
      if (in_a[b.hsrc[h]]) ++from_a[b.htgt[h]];
    for (int v = 0; v < b.num_ver; ++v)
      if (in_a[b.vtgt[v]]) ++to_a[b.vsrc[v]];
    // A direction consisting of identities only carries no augmentation data;
    // with a single augmentation object its condition is waived (H_n / V_n).
    bool hor_trivial = true, ver_trivial = true;
    for (int h = 0; h < b.num_hor && hor_trivial; ++h)
      hor_trivial = (h == b.id_hor[b.hsrc[h]]);
    for (int v = 0; v < b.num_ver && ver_trivial; ++v)
      ver_trivial = (v == b.id_ver[b.vsrc[v]]);
    bool waive_hor = hor_trivial && d.a.size() == 1;
    bool waive_ver = ver_trivial && d.a.size() == 1;
    for (int o = 0; o < b.num_ob; ++o) {
      if (!waive_hor && from_a[o] != 1)
        witness(rep, 0, "hor-from-augmentation", {o}, from_a[o]);
      if (!waive_ver && to_a[o] != 1)
        witness(rep, 0, "ver-to-augmentation", {o}, to_a[o]);
    }
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

namespace {

struct Var {
  enum Kind { Ob, Hor, Ver, Sq } kind;
  int id;
};

struct Triple {
  int a, b, c;
};

void bucket_triples(const std::vector<std::vector<int>>& comp, int count,
                    std::vector<std::vector<Triple>>& by_member) {
  by_member.assign(count, {});
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      int c = comp[a][b];
      if (c < 0) continue;
      Triple t{a, b, c};
      by_member[a].push_back(t);
      if (b != a) by_member[b].push_back(t);
      if (c != a && c != b) by_member[c].push_back(t);
    }
}

}  // namespace

std::vector<DoubleFunctor> hom_double_functors(
    const AugmentedDoubleCategory& sa, const AugmentedDoubleCategory& da,
    bool require_augmentation, std::int64_t budget) {
  const DoubleCategory& s = sa.base;
  const DoubleCategory& d = da.base;

  // variable order: objects in id order, each followed by the arrows and
  // squares it completes
  std::vector<Var> vars;
  {
    std::vector<char> ob_in(s.num_ob, 0), hor_in(s.num_hor, 0),
        ver_in(s.num_ver, 0), sq_in(s.num_sq, 0);
    for (int o = 0; o < s.num_ob; ++o) {
      ob_in[o] = 1;
      vars.push_back({Var::Ob, o});
      for (int h = 0; h < s.num_hor; ++h)
        if (!hor_in[h] && ob_in[s.hsrc[h]] && ob_in[s.htgt[h]]) {
          hor_in[h] = 1;
          vars.push_back({Var::Hor, h});
        }
      for (int v = 0; v < s.num_ver; ++v)
        if (!ver_in[v] && ob_in[s.vsrc[v]] && ob_in[s.vtgt[v]]) {
          ver_in[v] = 1;
          vars.push_back({Var::Ver, v});
        }
      for (int q = 0; q < s.num_sq; ++q)
        if (!sq_in[q] && hor_in[s.sq_sv[q]] && hor_in[s.sq_tv[q]] &&
            ver_in[s.sq_sh[q]] && ver_in[s.sq_th[q]]) {
          sq_in[q] = 1;
          vars.push_back({Var::Sq, q});
        }
    }
  }

  // target lookup tables
  std::map<std::pair<int, int>, std::vector<int>> d_hor_by_st, d_ver_by_st;
  for (int h = 0; h < d.num_hor; ++h)
    d_hor_by_st[{d.hsrc[h], d.htgt[h]}].push_back(h);
  for (int v = 0; v < d.num_ver; ++v)
    d_ver_by_st[{d.vsrc[v], d.vtgt[v]}].push_back(v);
  std::map<std::array<int, 4>, std::vector<int>> d_sq_by_boundary;
  for (int q = 0; q < d.num_sq; ++q)
    d_sq_by_boundary[{d.sq_sv[q], d.sq_tv[q], d.sq_sh[q], d.sq_th[q]}].push_back(q);

  std::vector<char> s_in_a(s.num_ob, 0), d_in_a(d.num_ob, 0);
  for (int o : sa.a) s_in_a[o] = 1;
  for (int o : da.a) d_in_a[o] = 1;

  std::vector<std::vector<Triple>> hor_triples, ver_triples, sqh_triples,
      sqv_triples;
  bucket_triples(s.comp_hor, s.num_hor, hor_triples);
  bucket_triples(s.comp_ver, s.num_ver, ver_triples);
  bucket_triples(s.comp_sq_hor, s.num_sq, sqh_triples);
  bucket_triples(s.comp_sq_ver, s.num_sq, sqv_triples);

  DoubleFunctor img;
  img.ob.assign(s.num_ob, -1);
  img.hor.assign(s.num_hor, -1);
  img.ver.assign(s.num_ver, -1);
  img.sq.assign(s.num_sq, -1);

  auto triples_ok = [&](const std::vector<Triple>& ts,
                        const std::vector<int>& simg,
                        const std::vector<std::vector<int>>& dcomp) {
    for (const Triple& t : ts) {
      int ia = simg[t.a], ib = simg[t.b], ic = simg[t.c];
      if (ia < 0 || ib < 0 || ic < 0) continue;
      if (dcomp[ia][ib] != ic) return false;
    }
    return true;
  };

  std::vector<DoubleFunctor> out;
  std::int64_t nodes = 0;
  const std::vector<int> empty;

  auto rec = [&](auto&& self, size_t vi) -> void {
    if (vi == vars.size()) {
      out.push_back(img);
      return;
    }
    if (++nodes > budget) throw Error("SearchBudgetExceeded", std::to_string(budget));
    Var v = vars[vi];
    switch (v.kind) {
      case Var::Ob: {
        if (require_augmentation && s_in_a[v.id]) {
          for (int cand : da.a) {
            img.ob[v.id] = cand;
            self(self, vi + 1);
          }
        } else {
          for (int cand = 0; cand < d.num_ob; ++cand) {
            img.ob[v.id] = cand;
            self(self, vi + 1);
          }
        }
        img.ob[v.id] = -1;
        return;
      }
      case Var::Hor: {
        int so = img.ob[s.hsrc[v.id]], to = img.ob[s.htgt[v.id]];
        if (v.id == s.id_hor[s.hsrc[v.id]]) {
          img.hor[v.id] = d.id_hor[so];
          if (triples_ok(hor_triples[v.id], img.hor, d.comp_hor))
            self(self, vi + 1);
          img.hor[v.id] = -1;
          return;
        }
        auto it = d_hor_by_st.find({so, to});
        if (it == d_hor_by_st.end()) return;
        for (int cand : it->second) {
          img.hor[v.id] = cand;
          if (triples_ok(hor_triples[v.id], img.hor, d.comp_hor))
            self(self, vi + 1);
        }
        img.hor[v.id] = -1;
        return;
      }
      case Var::Ver: {
        int so = img.ob[s.vsrc[v.id]], to = img.ob[s.vtgt[v.id]];
        if (v.id == s.id_ver[s.vsrc[v.id]]) {
          img.ver[v.id] = d.id_ver[so];
          if (triples_ok(ver_triples[v.id], img.ver, d.comp_ver))
            self(self, vi + 1);
          img.ver[v.id] = -1;
          return;
        }
        auto it = d_ver_by_st.find({so, to});
        if (it == d_ver_by_st.end()) return;
        for (int cand : it->second) {
          img.ver[v.id] = cand;
          if (triples_ok(ver_triples[v.id], img.ver, d.comp_ver))
            self(self, vi + 1);
        }
        img.ver[v.id] = -1;
        return;
      }
      case Var::Sq: {
        std::array<int, 4> boundary = {img.hor[s.sq_sv[v.id]],
                                       img.hor[s.sq_tv[v.id]],
                                       img.ver[s.sq_sh[v.id]],
                                       img.ver[s.sq_th[v.id]]};
        auto try_cand = [&](int cand) {
          img.sq[v.id] = cand;
          if (triples_ok(sqh_triples[v.id], img.sq, d.comp_sq_hor) &&
              triples_ok(sqv_triples[v.id], img.sq, d.comp_sq_ver))
            self(self, vi + 1);
        };
        if (v.id == s.id_sq_hor[s.sq_sh[v.id]]) {
          int cand = d.id_sq_hor[img.ver[s.sq_sh[v.id]]];
          if (d.sq_sv[cand] == boundary[0] && d.sq_tv[cand] == boundary[1] &&
              d.sq_th[cand] == boundary[3])
            try_cand(cand);
        } else if (v.id == s.id_sq_ver[s.sq_sv[v.id]]) {
          int cand = d.id_sq_ver[img.hor[s.sq_sv[v.id]]];
          if (d.sq_tv[cand] == boundary[1] && d.sq_sh[cand] == boundary[2] &&
              d.sq_th[cand] == boundary[3])
            try_cand(cand);
        } else {
          auto it = d_sq_by_boundary.find(boundary);
          if (it != d_sq_by_boundary.end())
            for (int cand : it->second) try_cand(cand);
        }
        img.sq[v.id] = -1;
        return;
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleFunctor> grid_set(const DoubleCategory& d, int q, int r,
                                    std::int64_t budget) {
  AugmentedDoubleCategory target{d, {}};
  return hom_double_functors(generate_box(q, r).cat, target, false, budget);
}

DoubleFunctor w_cosimplicial(const GeneratedDouble& wa, const GeneratedDouble& wb,
                             const MonotoneMap& g) {
  DoubleFunctor f;
  for (const auto& [i, j] : wa.ob) f.ob.push_back(wb.ob_id({g.v[i], g.v[j]}));
  for (const auto& [i, j, l] : wa.hor)
    f.hor.push_back(wb.hor_id({g.v[i], g.v[j], g.v[l]}));
  for (const auto& [i, k, j] : wa.ver)
    f.ver.push_back(wb.ver_id({g.v[i], g.v[k], g.v[j]}));
  for (const auto& [i, k, j, l] : wa.sq)
    f.sq.push_back(wb.sq_id({g.v[i], g.v[k], g.v[j], g.v[l]}));
  return f;
}

DoubleFunctor box_to_w(const GeneratedDouble& box, int q, int r,
                       const GeneratedDouble& w) {
  (void)r;
  DoubleFunctor f;
  int off = q + 1;
  for (const auto& [i, j] : box.ob) f.ob.push_back(w.ob_id({i, j + off}));
  for (const auto& [i, j, l] : box.hor)
    f.hor.push_back(w.hor_id({i, j + off, l + off}));
  for (const auto& [i, k, j] : box.ver)
    f.ver.push_back(w.ver_id({i, k, j + off}));
  for (const auto& [i, k, j, l] : box.sq)
    f.sq.push_back(w.sq_id({i, k, j + off, l + off}));
  return f;
}

DoubleFunctor box_cosimplicial(const GeneratedDouble& ba,
                               const GeneratedDouble& bb,
                               const MonotoneMap& f, const MonotoneMap& g) {
  DoubleFunctor fun;
  for (const auto& [i, j] : ba.ob) fun.ob.push_back(bb.ob_id({f.v[i], g.v[j]}));
  for (const auto& [i, j, l] : ba.hor)
    fun.hor.push_back(bb.hor_id({f.v[i], g.v[j], g.v[l]}));
  for (const auto& [i, k, j] : ba.ver)
    fun.ver.push_back(bb.ver_id({f.v[i], f.v[k], g.v[j]}));
  for (const auto& [i, k, j, l] : ba.sq)
    fun.sq.push_back(bb.sq_id({f.v[i], f.v[k], g.v[j], g.v[l]}));
  return fun;
}

bool strictly_augmented(const AugmentedDoubleCategory& d) {
  const DoubleCategory& b = d.base;
  std::vector<char> in_a(b.num_ob, 0);
  for (int o : d.a) in_a[o] = 1;
  std::vector<int> from_a(b.num_ob, 0), to_a(b.num_ob, 0);
  for (int h = 0; h < b.num_hor; ++h)
    if (in_a[b.hsrc[h]]) ++from_a[b.htgt[h]];
  for (int v = 0; v < b.num_ver; ++v)
    if (in_a[b.vtgt[v]]) ++to_a[b.vsrc[v]];
  for (int o = 0; o < b.num_ob; ++o)
    if (from_a[o] != 1 || to_a[o] != 1) return false;
  return true;
}

DoubleFunctor compose_functors(const DoubleFunctor& f, const DoubleFunctor& g) {
  DoubleFunctor h;
  h.ob.reserve(g.ob.size());
  for (int x : g.ob) h.ob.push_back(f.ob[x]);
  for (int x : g.hor) h.hor.push_back(f.hor[x]);
  for (int x : g.ver) h.ver.push_back(f.ver[x]);
  for (int x : g.sq) h.sq.push_back(f.sq[x]);
  return h;
}

}  // namespace sdot
