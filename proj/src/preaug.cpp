#include "sdot/preaug.hpp"

#include <algorithm>
#include <numeric>

namespace sdot {

SigmaMap compose(const SigmaMap& g, const SigmaMap& f) {
  if (f.kind == SigmaMap::IdMinusOne) return g;
  if (g.kind == SigmaMap::IdMinusOne) {
    if (f.kind != SigmaMap::ToMinusOne)
      throw Error("InvalidSigmaMap", "compose through [-1]");
    return f;
  }
  if (g.kind == SigmaMap::ToMinusOne) {
    if (f.kind != SigmaMap::Pair) throw Error("InvalidSigmaMap", "compose");
    return SigmaMap::to_minus_one(f.h.dom, f.v.dom);
  }
  if (f.kind != SigmaMap::Pair) throw Error("InvalidSigmaMap", "compose");
  return SigmaMap::pair(compose(g.h, f.h), compose(g.v, f.v));
}

void PreaugBisimplicialSet::allocate() {
  auto zero4 = [&](auto& t) {
    t.assign(depth + 1, std::vector<std::vector<std::vector<int>>>(depth + 1));
  };
  zero4(hface);
  zero4(vface);
  zero4(hdeg);
  zero4(vdeg);
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      if (k >= 1) hface[k][l].assign(k + 1, std::vector<int>(card[k][l], -1));
      if (l >= 1) vface[k][l].assign(l + 1, std::vector<int>(card[k][l], -1));
      if (k < depth) hdeg[k][l].assign(k + 1, std::vector<int>(card[k][l], -1));
      if (l < depth) vdeg[k][l].assign(l + 1, std::vector<int>(card[k][l], -1));
    }
  aug.assign(card_m1, -1);
}

int PreaugBisimplicialSet::act(const MonotoneMap& f, const MonotoneMap& g,
                               int x) const {
  if (f.cod > depth || g.cod > depth || f.dom > depth || g.dom > depth)
    throw Error("DepthTooSmall", "preaug act");
  int k = f.cod, l = g.cod;
  int cur = x;
  Factorization fh = factor_epi_mono(f);
  for (int a : fh.mono_misses) {
    cur = hface[k][l][a][cur];
    --k;
  }
  for (auto it = fh.epi_drops.rbegin(); it != fh.epi_drops.rend(); ++it) {
    cur = hdeg[k][l][*it][cur];
    ++k;
  }
  Factorization fv = factor_epi_mono(g);
  for (int a : fv.mono_misses) {
    cur = vface[k][l][a][cur];
    --l;
  }
  for (auto it = fv.epi_drops.rbegin(); it != fv.epi_drops.rend(); ++it) {
    cur = vdeg[k][l][*it][cur];
    ++l;
  }
  return cur;
}

int PreaugBisimplicialSet::from_minus_one(int q, int r, int a) const {
  int cur = aug[a];
  int k = 0;
  while (k < q) {
    cur = hdeg[k][0][0][cur];
    ++k;
  }
  int l = 0;
  while (l < r) {
    cur = vdeg[q][l][0][cur];
    ++l;
  }
  return cur;
}

void PreaugBisimplicialSet::validate() const {
  auto fail = [](const std::string& w) { throw Error("InvalidPreaug", w); };
  // range checks
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      for (int i = 0; k >= 1 && i <= k; ++i)
        for (int x : hface[k][l][i])
          if (x < 0 || x >= card[k - 1][l]) fail("hface range");
      for (int j = 0; l >= 1 && j <= l; ++j)
        for (int x : vface[k][l][j])
          if (x < 0 || x >= card[k][l - 1]) fail("vface range");
      for (int i = 0; k < depth && i <= k; ++i)
        for (int x : hdeg[k][l][i])
          if (x < 0 || x >= card[k + 1][l]) fail("hdeg range");
      for (int j = 0; l < depth && j <= l; ++j)
        for (int x : vdeg[k][l][j])
          if (x < 0 || x >= card[k][l + 1]) fail("vdeg range");
    }
  for (int x : aug)
    if (x < 0 || x >= card[0][0]) fail("aug range");

  // rows and columns are simplicial
  for (int l = 0; l <= depth; ++l) {
    TruncatedSimplicialSet row;
    row.depth = depth;
    row.card.resize(depth + 1);
    for (int k = 0; k <= depth; ++k) row.card[k] = card[k][l];
    row.face.resize(depth + 1);
    row.deg.resize(depth + 1);
    for (int k = 1; k <= depth; ++k) row.face[k] = hface[k][l];
    for (int k = 0; k < depth; ++k) row.deg[k] = hdeg[k][l];
    row.validate();
  }
  for (int k = 0; k <= depth; ++k) {
    TruncatedSimplicialSet col;
    col.depth = depth;
    col.card.resize(depth + 1);
    for (int l = 0; l <= depth; ++l) col.card[l] = card[k][l];
    col.face.resize(depth + 1);
    col.deg.resize(depth + 1);
    for (int l = 1; l <= depth; ++l) col.face[l] = vface[k][l];
    for (int l = 0; l < depth; ++l) col.deg[l] = vdeg[k][l];
    col.validate();
  }

  // the two directions commute
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      for (int x = 0; x < card[k][l]; ++x) {
        for (int i = 0; k >= 1 && i <= k; ++i) {
          for (int j = 0; l >= 1 && j <= l; ++j)
            if (vface[k - 1][l][j][hface[k][l][i][x]] !=
                hface[k][l - 1][i][vface[k][l][j][x]])
              fail("hface/vface commute");
          for (int j = 0; l < depth && j <= l; ++j)
            if (vdeg[k - 1][l][j][hface[k][l][i][x]] !=
                hface[k][l + 1][i][vdeg[k][l][j][x]])
              fail("hface/vdeg commute");
        }
        for (int i = 0; k < depth && i <= k; ++i) {
          for (int j = 0; l >= 1 && j <= l; ++j)
            if (vface[k + 1][l][j][hdeg[k][l][i][x]] !=
                hdeg[k][l - 1][i][vface[k][l][j][x]])
              fail("hdeg/vface commute");
          for (int j = 0; l < depth && j <= l; ++j)
            if (vdeg[k + 1][l][j][hdeg[k][l][i][x]] !=
                hdeg[k][l + 1][i][vdeg[k][l][j][x]])
              fail("hdeg/vdeg commute");
        }
      }
}

PreaugBisimplicialSet PreaugBisimplicialSet::truncated(int new_depth) const {
  if (new_depth > depth) throw Error("DepthTooSmall", "truncated");
  PreaugBisimplicialSet y;
  y.depth = new_depth;
  y.card_m1 = card_m1;
  y.card.assign(new_depth + 1, std::vector<int>(new_depth + 1));
  for (int k = 0; k <= new_depth; ++k)
    for (int l = 0; l <= new_depth; ++l) y.card[k][l] = card[k][l];
  y.allocate();
  y.aug = aug;
  for (int k = 0; k <= new_depth; ++k)
    for (int l = 0; l <= new_depth; ++l) {
      if (k >= 1) y.hface[k][l] = hface[k][l];
      if (l >= 1) y.vface[k][l] = vface[k][l];
      if (k < new_depth) y.hdeg[k][l] = hdeg[k][l];
      if (l < new_depth) y.vdeg[k][l] = vdeg[k][l];
    }
  return y;
}

void PreaugMap::validate() const {
  if (!source || !target || source->depth != target->depth)
    throw Error("InvalidPreaugMap", "depth mismatch");
  const auto& s = *source;
  const auto& t = *target;
  int d = s.depth;
  for (int k = 0; k <= d; ++k)
    for (int l = 0; l <= d; ++l)
      for (int x = 0; x < s.card[k][l]; ++x) {
        int fx = component[k][l][x];
        if (fx < 0 || fx >= t.card[k][l]) throw Error("InvalidPreaugMap", "range");
        for (int i = 0; k >= 1 && i <= k; ++i)
          if (component[k - 1][l][s.hface[k][l][i][x]] != t.hface[k][l][i][fx])
            throw Error("InvalidPreaugMap", "hface naturality");
        for (int j = 0; l >= 1 && j <= l; ++j)
          if (component[k][l - 1][s.vface[k][l][j][x]] != t.vface[k][l][j][fx])
            throw Error("InvalidPreaugMap", "vface naturality");
        for (int i = 0; k < d && i <= k; ++i)
          if (component[k + 1][l][s.hdeg[k][l][i][x]] != t.hdeg[k][l][i][fx])
            throw Error("InvalidPreaugMap", "hdeg naturality");
        for (int j = 0; l < d && j <= l; ++j)
          if (component[k][l + 1][s.vdeg[k][l][j][x]] != t.vdeg[k][l][j][fx])
            throw Error("InvalidPreaugMap", "vdeg naturality");
      }
  for (int a = 0; a < s.card_m1; ++a) {
    int fa = component_m1[a];
    if (fa < 0 || fa >= t.card_m1) throw Error("InvalidPreaugMap", "m1 range");
    if (component[0][0][s.aug[a]] != t.aug[fa])
      throw Error("InvalidPreaugMap", "aug naturality");
  }
}

namespace {

struct MonoTable {
  // cached enumerations of monotone maps [k] -> [n]
  std::vector<std::vector<MonotoneMap>> by_k;
  explicit MonoTable(int n, int depth) {
    for (int k = 0; k <= depth + 1; ++k) by_k.push_back(enumerate_monotone(k, n));
  }
};

}  // namespace

PreaugBisimplicialSet representable(int q, int r, int depth) {
  if (q < 0 || r < 0 || depth < 0) throw Error("InvalidArgument", "representable");
  PreaugBisimplicialSet y;
  y.depth = depth;
  y.card_m1 = 0;
  MonoTable mh(q, depth), mv(r, depth);
  y.card.assign(depth + 1, std::vector<int>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      y.card[k][l] =
          static_cast<int>(mh.by_k[k].size() * mv.by_k[l].size());
  y.allocate();
  auto id_of = [&](int k, int l, const MonotoneMap& f, const MonotoneMap& g) {
    (void)k;
    return monotone_rank(f) * static_cast<int>(mv.by_k[l].size()) +
           monotone_rank(g);
  };
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      for (const auto& f : mh.by_k[k])
        for (const auto& g : mv.by_k[l]) {
          int x = id_of(k, l, f, g);
          for (int i = 0; k >= 1 && i <= k; ++i)
            y.hface[k][l][i][x] =
                id_of(k - 1, l, compose(f, MonotoneMap::coface(i, k)), g);
          for (int j = 0; l >= 1 && j <= l; ++j)
            y.vface[k][l][j][x] =
                id_of(k, l - 1, f, compose(g, MonotoneMap::coface(j, l)));
          for (int i = 0; k < depth && i <= k; ++i)
            y.hdeg[k][l][i][x] =
                id_of(k + 1, l, compose(f, MonotoneMap::codegeneracy(i, k)), g);
          for (int j = 0; l < depth && j <= l; ++j)
            y.vdeg[k][l][j][x] =
                id_of(k, l + 1, f, compose(g, MonotoneMap::codegeneracy(j, l)));
        }
  return y;
}

PreaugBisimplicialSet representable_minus_one(int depth) {
  PreaugBisimplicialSet y;
  y.depth = depth;
  y.card_m1 = 1;
  y.card.assign(depth + 1, std::vector<int>(depth + 1, 1));
  y.allocate();
  for (auto& a : y.hface)
    for (auto& b : a)
      for (auto& c : b) std::fill(c.begin(), c.end(), 0);
  for (auto& a : y.vface)
    for (auto& b : a)
      for (auto& c : b) std::fill(c.begin(), c.end(), 0);
  for (auto& a : y.hdeg)
    for (auto& b : a)
      for (auto& c : b) std::fill(c.begin(), c.end(), 0);
  for (auto& a : y.vdeg)
    for (auto& b : a)
      for (auto& c : b) std::fill(c.begin(), c.end(), 0);
  y.aug = {0};
  return y;
}

PreaugMap representable_map(const PreaugBisimplicialSet& src,
                            const PreaugBisimplicialSet& tgt, int q1, int r1,
                            int q2, int r2, const MonotoneMap& phi,
                            const MonotoneMap& psi) {
  if (phi.dom != q1 || phi.cod != q2 || psi.dom != r1 || psi.cod != r2)
    throw Error("InvalidArgument", "representable_map ranks");
  int depth = src.depth;
  MonoTable mh(q1, depth), mv(r1, depth), th(q2, depth), tv(r2, depth);
  PreaugMap m;
  m.source = &src;
  m.target = &tgt;
  m.component.assign(depth + 1, std::vector<std::vector<int>>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      m.component[k][l].resize(src.card[k][l]);
      for (const auto& f : mh.by_k[k])
        for (const auto& g : mv.by_k[l]) {
          int x = monotone_rank(f) * static_cast<int>(mv.by_k[l].size()) +
                  monotone_rank(g);
          int fx = monotone_rank(compose(phi, f)) *
                       static_cast<int>(tv.by_k[l].size()) +
                   monotone_rank(compose(psi, g));
          m.component[k][l][x] = fx;
        }
    }
  return m;
}

PushoutResult preaug_pushout(const PreaugBisimplicialSet& a,
                             const PreaugBisimplicialSet& b,
                             const PreaugBisimplicialSet& c,
                             const PreaugMap& ab, const PreaugMap& ac) {
  int depth = a.depth;
  if (b.depth != depth || c.depth != depth)
    throw Error("InvalidArgument", "pushout depth mismatch");
  PushoutResult res;
  res.b_copy = b;
  res.c_copy = c;

  // union-find on the disjoint union per level (B first, then C), classes
  // canonically numbered by minimal member
  struct UF {
    std::vector<int> parent;
    explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    void unite(int x, int y) {
      x = find(x);
      y = find(y);
      if (x == y) return;
      if (x > y) std::swap(x, y);
      parent[y] = x;  // keep minimal id as root
    }
  };

  auto build_level = [&](int na, int nb, int nc,
                         const std::vector<int>& fab, const std::vector<int>& fac,
                         std::vector<int>& b_new, std::vector<int>& c_new) -> int {
    UF uf(nb + nc);
    for (int x = 0; x < na; ++x) uf.unite(fab[x], nb + fac[x]);
    std::vector<int> root_to_class(nb + nc, -1);
    int classes = 0;
    for (int x = 0; x < nb + nc; ++x)
      if (uf.find(x) == x) root_to_class[x] = classes++;
    b_new.resize(nb);
    c_new.resize(nc);
    for (int x = 0; x < nb; ++x) b_new[x] = root_to_class[uf.find(x)];
    for (int x = 0; x < nc; ++x) c_new[x] = root_to_class[uf.find(nb + x)];
    return classes;
  };

  PreaugBisimplicialSet& y = res.object;
  y.depth = depth;
  y.card.assign(depth + 1, std::vector<int>(depth + 1));
  std::vector<std::vector<std::vector<int>>> bn(depth + 1,
                                                std::vector<std::vector<int>>(depth + 1)),
      cn(depth + 1, std::vector<std::vector<int>>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      y.card[k][l] = build_level(a.card[k][l], b.card[k][l], c.card[k][l],
                                 ab.component[k][l], ac.component[k][l],
                                 bn[k][l], cn[k][l]);
  std::vector<int> bn1, cn1;
  y.card_m1 = build_level(a.card_m1, b.card_m1, c.card_m1, ab.component_m1,
                          ac.component_m1, bn1, cn1);
  y.allocate();

  auto fill_map = [&](std::vector<int>& out, const std::vector<int>& bmap,
                      const std::vector<int>& cmap, const std::vector<int>& src_bn,
                      const std::vector<int>& src_cn, const std::vector<int>& dst_bn,
                      const std::vector<int>& dst_cn) {
    for (int x = 0; x < static_cast<int>(bmap.size()); ++x) {
      int cls = src_bn[x];
      int val = dst_bn[bmap[x]];
      if (out[cls] != -1 && out[cls] != val)
        throw Error("Internal", "pushout map not well-defined");
      out[cls] = val;
    }
    for (int x = 0; x < static_cast<int>(cmap.size()); ++x) {
      int cls = src_cn[x];
      int val = dst_cn[cmap[x]];
      if (out[cls] != -1 && out[cls] != val)
        throw Error("Internal", "pushout map not well-defined");
      out[cls] = val;
    }
  };

  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      for (int i = 0; k >= 1 && i <= k; ++i)
        fill_map(y.hface[k][l][i], b.hface[k][l][i], c.hface[k][l][i], bn[k][l],
                 cn[k][l], bn[k - 1][l], cn[k - 1][l]);
      for (int j = 0; l >= 1 && j <= l; ++j)
        fill_map(y.vface[k][l][j], b.vface[k][l][j], c.vface[k][l][j], bn[k][l],
                 cn[k][l], bn[k][l - 1], cn[k][l - 1]);
      for (int i = 0; k < depth && i <= k; ++i)
        fill_map(y.hdeg[k][l][i], b.hdeg[k][l][i], c.hdeg[k][l][i], bn[k][l],
                 cn[k][l], bn[k + 1][l], cn[k + 1][l]);
      for (int j = 0; l < depth && j <= l; ++j)
        fill_map(y.vdeg[k][l][j], b.vdeg[k][l][j], c.vdeg[k][l][j], bn[k][l],
                 cn[k][l], bn[k][l + 1], cn[k][l + 1]);
    }
  fill_map(y.aug, b.aug, c.aug, bn1, cn1, bn[0][0], cn[0][0]);
  y.validate();

  res.from_b.source = &res.b_copy;
  res.from_b.target = &res.object;
  res.from_b.component = bn;
  res.from_b.component_m1 = bn1;
  res.from_c.source = &res.c_copy;
  res.from_c.target = &res.object;
  res.from_c.component = cn;
  res.from_c.component_m1 = cn1;
  return res;
}

WPreaug generate_w_preaug(int n, int depth) {
  if (n < 0 || depth < 0) throw Error("InvalidArgument", "generate_w_preaug");
  WPreaug w;
  w.n = n;
  PreaugBisimplicialSet& y = w.y;
  y.depth = depth;
  y.card_m1 = n + 1;
  w.chains.assign(depth + 1,
                  std::vector<std::vector<std::vector<int>>>(depth + 1));
  y.card.assign(depth + 1, std::vector<int>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      for (const auto& i : enumerate_monotone(k, n))
        for (const auto& j : enumerate_monotone(l, n)) {
          if (i.v[k] > j.v[0]) continue;
          std::vector<int> chain = i.v;
          chain.insert(chain.end(), j.v.begin(), j.v.end());
          w.chains[k][l].push_back(std::move(chain));
        }
      std::sort(w.chains[k][l].begin(), w.chains[k][l].end());
      y.card[k][l] = static_cast<int>(w.chains[k][l].size());
    }
  y.allocate();
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      for (int x = 0; x < y.card[k][l]; ++x) {
        const auto& ch = w.chains[k][l][x];
        for (int i = 0; k >= 1 && i <= k; ++i) {
          auto e = ch;
          e.erase(e.begin() + i);
          y.hface[k][l][i][x] = w.chain_index(k - 1, l, e);
        }
        for (int j = 0; l >= 1 && j <= l; ++j) {
          auto e = ch;
          e.erase(e.begin() + k + 1 + j);
          y.vface[k][l][j][x] = w.chain_index(k, l - 1, e);
        }
        for (int i = 0; k < depth && i <= k; ++i) {
          auto e = ch;
          e.insert(e.begin() + i, e[i]);
          y.hdeg[k][l][i][x] = w.chain_index(k + 1, l, e);
        }
        for (int j = 0; l < depth && j <= l; ++j) {
          auto e = ch;
          e.insert(e.begin() + k + 1 + j, e[k + 1 + j]);
          y.vdeg[k][l][j][x] = w.chain_index(k, l + 1, e);
        }
      }
  for (int a = 0; a <= n; ++a) y.aug[a] = w.chain_index(0, 0, {a, a});
  y.validate();
  return w;
}

int WPreaug::chain_index(int k, int l, const std::vector<int>& chain) const {
  const auto& lvl = chains[k][l];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), chain);
  if (it == lvl.end() || *it != chain) return -1;
  return static_cast<int>(it - lvl.begin());
}

namespace {

PreaugBisimplicialSet glue_to_point(int q, int r, int depth,
                                    const MonotoneMap& phi,
                                    const MonotoneMap& psi) {
  // pushout of  Sigma[q,r] <-(phi,psi)- Sigma[0,0] -> Sigma[-1]
  PreaugBisimplicialSet a = representable(0, 0, depth);
  PreaugBisimplicialSet b = representable(q, r, depth);
  PreaugBisimplicialSet c = representable_minus_one(depth);
  PreaugMap ab = representable_map(a, b, 0, 0, q, r, phi, psi);
  PreaugMap ac;
  ac.source = &a;
  ac.target = &c;
  ac.component.assign(depth + 1, std::vector<std::vector<int>>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      ac.component[k][l].assign(a.card[k][l], 0);
  return preaug_pushout(a, b, c, ab, ac).object;
}

}  // namespace

PreaugBisimplicialSet generate_h_preaug(int n, int depth) {
  if (n == 0) return representable_minus_one(depth);
  // glue along s^h = (id_[0], alpha^0): (0,0) -> (0,n)
  return glue_to_point(0, n, depth, MonotoneMap::identity(0),
                       MonotoneMap::alpha(0, n));
}

PreaugBisimplicialSet generate_v_preaug(int n, int depth) {
  if (n == 0) return representable_minus_one(depth);
  // glue along t^v = (alpha^n, id_[0]): (0,0) -> (n,0)
  return glue_to_point(n, 0, depth, MonotoneMap::alpha(n, n),
                       MonotoneMap::identity(0));
}

AugmentedNerve grid_nerve(const AugmentedDoubleCategory& d, int depth,
                          std::int64_t budget) {
  d.base.require_valid();
  AugmentedNerve nv;
  std::vector<std::vector<GeneratedDouble>> boxes(depth + 1);
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) boxes[k].push_back(generate_box(k, l));
  nv.grids.assign(depth + 1, {});
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      auto g = grid_set(d.base, k, l, budget);
      std::sort(g.begin(), g.end());
      nv.grids[k].push_back(std::move(g));
    }
  auto gid = [&](int k, int l, const DoubleFunctor& f) {
    const auto& v = nv.grids[k][l];
    auto it = std::lower_bound(v.begin(), v.end(), f);
    if (it == v.end() || !(*it == f)) throw Error("Internal", "nerve grid lookup");
    return static_cast<int>(it - v.begin());
  };

  PreaugBisimplicialSet& y = nv.y;
  y.depth = depth;
  y.card_m1 = static_cast<int>(d.a.size());
  y.card.assign(depth + 1, std::vector<int>(depth + 1));
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l)
      y.card[k][l] = static_cast<int>(nv.grids[k][l].size());
  y.allocate();
  for (int k = 0; k <= depth; ++k)
    for (int l = 0; l <= depth; ++l) {
      MonotoneMap idk = MonotoneMap::identity(k), idl = MonotoneMap::identity(l);
      for (int x = 0; x < y.card[k][l]; ++x) {
        const DoubleFunctor& f = nv.grids[k][l][x];
        for (int i = 0; k >= 1 && i <= k; ++i)
          y.hface[k][l][i][x] =
              gid(k - 1, l,
                  compose_functors(f, box_cosimplicial(boxes[k - 1][l], boxes[k][l],
                                                       MonotoneMap::coface(i, k),
                                                       idl)));
        for (int j = 0; l >= 1 && j <= l; ++j)
          y.vface[k][l][j][x] =
              gid(k, l - 1,
                  compose_functors(f, box_cosimplicial(boxes[k][l - 1], boxes[k][l],
                                                       idk,
                                                       MonotoneMap::coface(j, l))));
        for (int i = 0; k < depth && i <= k; ++i)
          y.hdeg[k][l][i][x] =
              gid(k + 1, l,
                  compose_functors(f, box_cosimplicial(boxes[k + 1][l], boxes[k][l],
                                                       MonotoneMap::codegeneracy(i, k),
                                                       idl)));
        for (int j = 0; l < depth && j <= l; ++j)
          y.vdeg[k][l][j][x] =
              gid(k, l + 1,
                  compose_functors(f, box_cosimplicial(boxes[k][l + 1], boxes[k][l],
                                                       idk,
                                                       MonotoneMap::codegeneracy(j, l))));
      }
    }
  for (int a = 0; a < y.card_m1; ++a) {
    int o = d.a[a];
    DoubleFunctor c;
    c.ob = {o};
    c.hor = {d.base.id_hor[o]};
    c.ver = {d.base.id_ver[o]};
    c.sq = {d.base.id_sq_hor[d.base.id_ver[o]]};
    y.aug[a] = gid(0, 0, c);
  }
  y.validate();
  return nv;
}

AugmentedNerve augmented_nerve(const AugmentedDoubleCategory& d, int depth,
                               std::int64_t budget) {
  if (!check_double(d, DoubleProperty::stable).verdict ||
      !check_double(d, DoubleProperty::augmented).verdict)
    throw Error("NotStableOrAugmented", "augmented_nerve");
  return grid_nerve(d, depth, budget);
}

PreaugProperty preaug_property_from_string(const std::string& s) {
  if (s == "double_segal") return PreaugProperty::double_segal;
  if (s == "stable_baby") return PreaugProperty::stable_baby;
  if (s == "stable_full") return PreaugProperty::stable_full;
  if (s == "augmented_baby") return PreaugProperty::augmented_baby;
  if (s == "augmented_full") return PreaugProperty::augmented_full;
  if (s == "pointed") return PreaugProperty::pointed;
  if (s == "split") return PreaugProperty::split;
  throw Error("InvalidArgument", "unknown preaug property " + s);
}

std::string to_string(PreaugProperty p) {
  switch (p) {
    case PreaugProperty::double_segal: return "double_segal";
    case PreaugProperty::stable_baby: return "stable_baby";
    case PreaugProperty::stable_full: return "stable_full";
    case PreaugProperty::augmented_baby: return "augmented_baby";
    case PreaugProperty::augmented_full: return "augmented_full";
    case PreaugProperty::pointed: return "pointed";
    case PreaugProperty::split: return "split";
  }
  return "?";
}

namespace {

std::vector<int> act_tab(const PreaugBisimplicialSet& y, const MonotoneMap& f,
                         const MonotoneMap& g) {
  std::vector<int> out(y.card[f.cod][g.cod]);
  for (int x = 0; x < y.card[f.cod][g.cod]; ++x) out[x] = y.act(f, g, x);
  return out;
}

void report_fiber(CheckReport& rep, int level, const std::string& ctx,
                  const FiberMapCheck& c) {
  if (c.bijective) return;
  rep.failure_count += static_cast<int>(c.bad.size());
  if (rep.witnesses.empty())
    rep.witnesses.push_back({level, ctx, c.bad[0].first, c.bad[0].second});
}

// q-fold Segal map in the h-variable at (q, r)
void segal_h(const PreaugBisimplicialSet& y, int q, int r, CheckReport& rep) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  auto src = act_tab(y, MonotoneMap::alpha(0, 1), MonotoneMap::identity(r));
  auto tgt = act_tab(y, MonotoneMap::alpha(1, 1), MonotoneMap::identity(r));
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == q) {
      tuples.push_back(cur);
      return;
    }
    for (int e = 0; e < y.card[1][r]; ++e) {
      if (!cur.empty() && tgt[cur.back()] != src[e]) continue;
      cur.push_back(e);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::map<std::vector<int>, int> hits;
  for (const auto& t : tuples) hits[t] = 0;
  for (int x = 0; x < y.card[q][r]; ++x) {
    std::vector<int> t(q);
    for (int i = 0; i < q; ++i)
      t[i] = y.act(MonotoneMap::beta(i, q), MonotoneMap::identity(r), x);
    ++hits.at(t);
  }
  FiberMapCheck c;
  for (const auto& [t, count] : hits)
    if (count != 1) {
      c.bijective = false;
      c.bad.push_back({t, count});
    }
  report_fiber(rep, q + r, "h-segal(q=" + std::to_string(q) +
                               ",r=" + std::to_string(r) + ")",
               c);
}

void segal_v(const PreaugBisimplicialSet& y, int q, int r, CheckReport& rep) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  auto src = act_tab(y, MonotoneMap::identity(q), MonotoneMap::alpha(0, 1));
  auto tgt = act_tab(y, MonotoneMap::identity(q), MonotoneMap::alpha(1, 1));
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == r) {
      tuples.push_back(cur);
      return;
    }
    for (int e = 0; e < y.card[q][1]; ++e) {
      if (!cur.empty() && tgt[cur.back()] != src[e]) continue;
      cur.push_back(e);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::map<std::vector<int>, int> hits;
  for (const auto& t : tuples) hits[t] = 0;
  for (int x = 0; x < y.card[q][r]; ++x) {
    std::vector<int> t(r);
    for (int j = 0; j < r; ++j)
      t[j] = y.act(MonotoneMap::identity(q), MonotoneMap::beta(j, r), x);
    ++hits.at(t);
  }
  FiberMapCheck c;
  for (const auto& [t, count] : hits)
    if (count != 1) {
      c.bijective = false;
      c.bad.push_back({t, count});
    }
  report_fiber(rep, q + r, "v-segal(q=" + std::to_string(q) +
                               ",r=" + std::to_string(r) + ")",
               c);
}

void stability_at(const PreaugBisimplicialSet& y, int q, int r,
                  CheckReport& rep) {
  // span: legs (s^h)*: Y_{q,r} -> Y_{q,0} and (s^v)*: Y_{q,r} -> Y_{0,r};
  // fiber over (s^v)*: Y_{q,0} -> Y_{0,0} and (s^h)*: Y_{0,r} -> Y_{0,0}
  auto legA = act_tab(y, MonotoneMap::identity(q), MonotoneMap::alpha(0, r));
  auto legB = act_tab(y, MonotoneMap::alpha(0, q), MonotoneMap::identity(r));
  auto fA = act_tab(y, MonotoneMap::alpha(0, q), MonotoneMap::identity(0));
  auto fB = act_tab(y, MonotoneMap::identity(0), MonotoneMap::alpha(0, r));
  auto c = check_fiber_bijection(y.card[q][r], legA, legB, y.card[q][0],
                                 y.card[0][r], fA, fB);
  report_fiber(rep, q + r,
               "stability-span(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")",
               c);
  // cospan with t's
  legA = act_tab(y, MonotoneMap::identity(q), MonotoneMap::alpha(r, r));
  legB = act_tab(y, MonotoneMap::alpha(q, q), MonotoneMap::identity(r));
  fA = act_tab(y, MonotoneMap::alpha(q, q), MonotoneMap::identity(0));
  fB = act_tab(y, MonotoneMap::identity(0), MonotoneMap::alpha(r, r));
  c = check_fiber_bijection(y.card[q][r], legA, legB, y.card[q][0],
                            y.card[0][r], fA, fB);
  report_fiber(rep, q + r,
               "stability-cospan(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")",
               c);
}

void augmentation_at_h(const PreaugBisimplicialSet& y, int q, CheckReport& rep) {
  // Y_{q,0} x^{t_v}_{Y_{0,0}} Y_{-1} -> Y_{q-1,0} via b_v o pr_1
  auto tv = act_tab(y, MonotoneMap::alpha(q, q), MonotoneMap::identity(0));
  // b^v: [q-1] -> [q] is i |-> i, i.e. the coface d^q
  auto bv = act_tab(y, MonotoneMap::coface(q, q), MonotoneMap::identity(0));
  std::map<int, int> hits;
  for (int t = 0; t < y.card[q - 1][0]; ++t) hits[t] = 0;
  for (int x = 0; x < y.card[q][0]; ++x)
    for (int a = 0; a < y.card_m1; ++a)
      if (tv[x] == y.aug[a]) ++hits.at(bv[x]);
  FiberMapCheck c;
  for (const auto& [t, count] : hits)
    if (count != 1) {
      c.bijective = false;
      c.bad.push_back({{t}, count});
    }
  report_fiber(rep, q, "augmentation-v(q=" + std::to_string(q) + ")", c);
}

void augmentation_at_v(const PreaugBisimplicialSet& y, int r, CheckReport& rep) {
  // Y_{0,r} x^{s_h}_{Y_{0,0}} Y_{-1} -> Y_{0,r-1} via e_h o pr_1
  auto sh = act_tab(y, MonotoneMap::identity(0), MonotoneMap::alpha(0, r));
  // e^h: [r-1] -> [r] is i |-> i+1, i.e. the coface d^0
  auto eh = act_tab(y, MonotoneMap::identity(0), MonotoneMap::coface(0, r));
  std::map<int, int> hits;
  for (int t = 0; t < y.card[0][r - 1]; ++t) hits[t] = 0;
  for (int x = 0; x < y.card[0][r]; ++x)
    for (int a = 0; a < y.card_m1; ++a)
      if (sh[x] == y.aug[a]) ++hits.at(eh[x]);
  FiberMapCheck c;
  for (const auto& [t, count] : hits)
    if (count != 1) {
      c.bijective = false;
      c.bad.push_back({{t}, count});
    }
  report_fiber(rep, r, "augmentation-h(r=" + std::to_string(r) + ")", c);
}

}  // namespace

CheckReport check_preaug(const PreaugBisimplicialSet& y, PreaugProperty p) {
  CheckReport rep;
  rep.property = to_string(p);
  int d = y.depth;
  switch (p) {
    case PreaugProperty::double_segal: {
      if (d < 2) throw Error("DepthTooSmall", "double_segal needs depth >= 2");
      for (int q = 2; q <= d; ++q)
        for (int r = 1; r <= d; ++r) segal_h(y, q, r, rep);
      for (int q = 1; q <= d; ++q)
        for (int r = 2; r <= d; ++r) segal_v(y, q, r, rep);
      break;
    }
    case PreaugProperty::stable_baby:
      if (d < 1) throw Error("DepthTooSmall", "stable_baby needs depth >= 1");
      stability_at(y, 1, 1, rep);
      break;
    case PreaugProperty::stable_full:
      if (d < 1) throw Error("DepthTooSmall", "stable_full needs depth >= 1");
      for (int q = 1; q <= d; ++q)
        for (int r = 1; r <= d; ++r) stability_at(y, q, r, rep);
      break;
    case PreaugProperty::augmented_baby:
      if (d < 1) throw Error("DepthTooSmall", "augmented_baby needs depth >= 1");
      augmentation_at_h(y, 1, rep);
      augmentation_at_v(y, 1, rep);
      break;
    case PreaugProperty::augmented_full:
      if (d < 1) throw Error("DepthTooSmall", "augmented_full needs depth >= 1");
      for (int q = 1; q <= d; ++q) augmentation_at_h(y, q, rep);
      for (int r = 1; r <= d; ++r) augmentation_at_v(y, r, rep);
      break;
    case PreaugProperty::pointed:
      if (y.card_m1 != 1) {
        rep.failure_count = 1;
        rep.witnesses.push_back(
            {-1, "|Y_{-1}|=" + std::to_string(y.card_m1), {}, 0});
      }
      break;
    case PreaugProperty::split: {
      if (d < 1) throw Error("DepthTooSmall", "split needs depth >= 1");
      // corners of Y_{1,1}
      auto bottom_left = act_tab(y, MonotoneMap::alpha(1, 1), MonotoneMap::alpha(0, 1));
      auto top_left = act_tab(y, MonotoneMap::alpha(0, 1), MonotoneMap::alpha(0, 1));
      auto bottom_right = act_tab(y, MonotoneMap::alpha(1, 1), MonotoneMap::alpha(1, 1));
      std::map<std::pair<int, int>, int> hits;
      for (int u = 0; u < y.card[0][0]; ++u)
        for (int v = 0; v < y.card[0][0]; ++v) hits[{u, v}] = 0;
      for (int x = 0; x < y.card[1][1]; ++x)
        for (int a = 0; a < y.card_m1; ++a)
          if (bottom_left[x] == y.aug[a]) ++hits.at({top_left[x], bottom_right[x]});
      FiberMapCheck c;
      for (const auto& [t, count] : hits)
        if (count != 1) {
          c.bijective = false;
          c.bad.push_back({{t.first, t.second}, count});
        }
      report_fiber(rep, 2, "split", c);
      break;
    }
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

std::vector<PreaugMap> hom_preaug(const PreaugBisimplicialSet& f,
                                  const PreaugBisimplicialSet& y) {
  if (f.depth != y.depth) throw Error("InvalidArgument", "hom_preaug depths");
  int d = f.depth;

  // flatten cells: id 0..card_m1-1 for level -1, then levels (k,l) in
  // lexicographic order
  struct Level {
    int k, l, offset;
  };
  std::vector<Level> levels;
  int total = f.card_m1;
  std::vector<std::vector<int>> offset(d + 1, std::vector<int>(d + 1));
  for (int k = 0; k <= d; ++k)
    for (int l = 0; l <= d; ++l) {
      offset[k][l] = total;
      levels.push_back({k, l, total});
      total += f.card[k][l];
    }
  auto cell_of = [&](int k, int l, int x) { return offset[k][l] + x; };

  // determination/propagation engine on a value array (-1 unknown)
  struct Frame {
    std::vector<int> val;
  };
  std::vector<PreaugMap> out;

  // propagate from a queue of newly determined cells; false on conflict
  auto determine = [&](std::vector<int>& val, int cell, int v,
                       std::vector<int>& queue) -> bool {
    if (val[cell] != -1) return val[cell] == v;
    val[cell] = v;
    queue.push_back(cell);
    return true;
  };

  auto locate = [&](int cell) -> std::tuple<int, int, int> {
    // returns (k, l, x); k = -1 encodes level -1
    if (cell < f.card_m1) return {-1, -1, cell};
    for (int k = d; k >= 0; --k)
      for (int l = d; l >= 0; --l)
        if (cell >= offset[k][l]) {
          if (cell - offset[k][l] < f.card[k][l]) return {k, l, cell - offset[k][l]};
        }
    throw Error("Internal", "hom_preaug locate");
  };

  auto propagate = [&](std::vector<int>& val, std::vector<int>& queue) -> bool {
    while (!queue.empty()) {
      int cell = queue.back();
      queue.pop_back();
      auto [k, l, x] = locate(cell);
      int v = val[cell];
      if (k < 0) {
        // level -1: forces the augmentation image
        if (!determine(val, cell_of(0, 0, f.aug[x]), y.aug[v], queue))
          return false;
        continue;
      }
      for (int i = 0; k >= 1 && i <= k; ++i)
        if (!determine(val, cell_of(k - 1, l, f.hface[k][l][i][x]),
                       y.hface[k][l][i][v], queue))
          return false;
      for (int j = 0; l >= 1 && j <= l; ++j)
        if (!determine(val, cell_of(k, l - 1, f.vface[k][l][j][x]),
                       y.vface[k][l][j][v], queue))
          return false;
      for (int i = 0; k < d && i <= k; ++i)
        if (!determine(val, cell_of(k + 1, l, f.hdeg[k][l][i][x]),
                       y.hdeg[k][l][i][v], queue))
          return false;
      for (int j = 0; l < d && j <= l; ++j)
        if (!determine(val, cell_of(k, l + 1, f.vdeg[k][l][j][x]),
                       y.vdeg[k][l][j][v], queue))
          return false;
    }
    return true;
  };

  // candidate domain for an undetermined cell, filtered by determined faces
  auto domain = [&](const std::vector<int>& val, int cell) -> std::vector<int> {
    auto [k, l, x] = locate(cell);
    std::vector<int> dom;
    if (k < 0) {
      for (int v = 0; v < y.card_m1; ++v) {
        int img = val[cell_of(0, 0, f.aug[x])];
        if (img != -1 && y.aug[v] != img) continue;
        dom.push_back(v);
      }
      return dom;
    }
    for (int v = 0; v < y.card[k][l]; ++v) {
      bool ok = true;
      for (int i = 0; ok && k >= 1 && i <= k; ++i) {
        int img = val[cell_of(k - 1, l, f.hface[k][l][i][x])];
        if (img != -1 && y.hface[k][l][i][v] != img) ok = false;
      }
      for (int j = 0; ok && l >= 1 && j <= l; ++j) {
        int img = val[cell_of(k, l - 1, f.vface[k][l][j][x])];
        if (img != -1 && y.vface[k][l][j][v] != img) ok = false;
      }
      if (ok) dom.push_back(v);
    }
    return dom;
  };

  // variable selection: first undetermined cell with a determined face
  // (constrained), otherwise the first undetermined cell
  auto select = [&](const std::vector<int>& val) -> int {
    int fallback = -1;
    for (int cell = 0; cell < total; ++cell) {
      if (val[cell] != -1) continue;
      if (fallback < 0) fallback = cell;
      auto [k, l, x] = locate(cell);
      if (k < 0) {
        if (val[cell_of(0, 0, f.aug[x])] != -1) return cell;
        continue;
      }
      bool constrained = false;
      for (int i = 0; !constrained && k >= 1 && i <= k; ++i)
        if (val[cell_of(k - 1, l, f.hface[k][l][i][x])] != -1) constrained = true;
      for (int j = 0; !constrained && l >= 1 && j <= l; ++j)
        if (val[cell_of(k, l - 1, f.vface[k][l][j][x])] != -1) constrained = true;
      if (constrained) return cell;
    }
    return fallback;
  };

  auto emit = [&](const std::vector<int>& val) {
    PreaugMap m;
    m.source = &f;
    m.target = &y;
    m.component_m1.assign(val.begin(), val.begin() + f.card_m1);
    m.component.assign(d + 1, std::vector<std::vector<int>>(d + 1));
    for (int k = 0; k <= d; ++k)
      for (int l = 0; l <= d; ++l)
        m.component[k][l].assign(val.begin() + offset[k][l],
                                 val.begin() + offset[k][l] + f.card[k][l]);
    out.push_back(std::move(m));
  };

  auto rec = [&](auto&& self, std::vector<int> val) -> void {
    int cell = select(val);
    if (cell < 0) {
      emit(val);
      return;
    }
    for (int v : domain(val, cell)) {
      std::vector<int> next = val;
      std::vector<int> queue;
      if (!determine(next, cell, v, queue)) continue;
      if (!propagate(next, queue)) continue;
      self(self, std::move(next));
    }
  };
  rec(rec, std::vector<int>(total, -1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdot
