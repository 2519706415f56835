#include "sdot/simpset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdot/polygon.hpp"

namespace sdot {

void TruncatedSimplicialSet::allocate() {
  face.assign(depth + 1, {});
  deg.assign(depth + 1, {});
  for (int k = 1; k <= depth; ++k) face[k].assign(k + 1, std::vector<int>(card[k], -1));
  for (int k = 0; k < depth; ++k) deg[k].assign(k + 1, std::vector<int>(card[k], -1));
}

int TruncatedSimplicialSet::act(const MonotoneMap& theta, int x) const {
  if (theta.cod > depth || theta.dom > depth)
    throw Error("DepthTooSmall", "act " + to_string(theta));
  Factorization f = factor_epi_mono(theta);
  int cur = x;
  int lvl = theta.cod;
  for (int a : f.mono_misses) {
    cur = face[lvl][a][cur];
    --lvl;
  }
  for (auto it = f.epi_drops.rbegin(); it != f.epi_drops.rend(); ++it) {
    cur = deg[lvl][*it][cur];
    ++lvl;
  }
  return cur;
}

bool TruncatedSimplicialSet::is_nondegenerate(int k, int x) const {
  if (k == 0) return true;
  for (int i = 0; i < k; ++i)
    for (int y = 0; y < card[k - 1]; ++y)
      if (deg[k - 1][i][y] == x) return false;
  return true;
}

std::vector<int> TruncatedSimplicialSet::nondegenerate_count() const {
  std::vector<int> out(depth + 1, 0);
  for (int k = 0; k <= depth; ++k)
    for (int x = 0; x < card[k]; ++x)
      if (is_nondegenerate(k, x)) ++out[k];
  return out;
}

void TruncatedSimplicialSet::validate() const {
  auto fail = [](const std::string& what) {
    throw Error("InvalidSimplicialSet", what);
  };
  if (static_cast<int>(card.size()) != depth + 1) fail("card size");
  for (int k = 1; k <= depth; ++k) {
    if (static_cast<int>(face[k].size()) != k + 1) fail("face arity");
    for (int i = 0; i <= k; ++i)
      for (int x : face[k][i])
        if (x < 0 || x >= card[k - 1]) fail("face range");
  }
  for (int k = 0; k < depth; ++k) {
    if (static_cast<int>(deg[k].size()) != k + 1) fail("deg arity");
    for (int i = 0; i <= k; ++i)
      for (int x : deg[k][i])
        if (x < 0 || x >= card[k + 1]) fail("deg range");
  }
  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= depth; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < card[k]; ++x)
          if (face[k - 1][i][face[k][j][x]] != face[k - 1][j - 1][face[k][i][x]])
            fail("d_i d_j");
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int k = 0; k + 2 <= depth; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < card[k]; ++x)
          if (deg[k + 1][i][deg[k][j][x]] != deg[k + 1][j + 1][deg[k][i][x]])
            fail("s_i s_j");
  // d_i s_j relations
  for (int k = 0; k < depth; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i)
        for (int x = 0; x < card[k]; ++x) {
          int lhs = face[k + 1][i][deg[k][j][x]];
          int rhs;
          if (i < j)
            rhs = (k >= 1) ? deg[k - 1][j - 1][face[k][i][x]] : -2;
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = (k >= 1) ? deg[k - 1][j][face[k][i - 1][x]] : -2;
          if (rhs != -2 && lhs != rhs) fail("d_i s_j");
        }
}

void SimplicialMap::validate() const {
  if (!source || !target || source->depth != target->depth)
    throw Error("InvalidSimplicialMap", "depth mismatch");
  const auto& s = *source;
  const auto& t = *target;
  for (int k = 0; k <= s.depth; ++k)
    for (int x = 0; x < s.card[k]; ++x)
      if (component[k][x] < 0 || component[k][x] >= t.card[k])
        throw Error("InvalidSimplicialMap", "range");
  for (int k = 1; k <= s.depth; ++k)
    for (int i = 0; i <= k; ++i)
      for (int x = 0; x < s.card[k]; ++x)
        if (component[k - 1][s.face[k][i][x]] != t.face[k][i][component[k][x]])
          throw Error("InvalidSimplicialMap", "face naturality");
  for (int k = 0; k < s.depth; ++k)
    for (int i = 0; i <= k; ++i)
      for (int x = 0; x < s.card[k]; ++x)
        if (component[k + 1][s.deg[k][i][x]] != t.deg[k][i][component[k][x]])
          throw Error("InvalidSimplicialMap", "degeneracy naturality");
}

int DeltaCodec::index(int k, const std::vector<int>& vals) const {
  const auto& lvl = elems[k];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), vals);
  if (it == lvl.end() || *it != vals) return -1;
  return static_cast<int>(it - lvl.begin());
}

DeltaCodec standard_simplex_codec(int n, int depth) {
  DeltaCodec c;
  c.n = n;
  c.elems.resize(depth + 1);
  for (int k = 0; k <= depth; ++k)
    for (const auto& m : enumerate_monotone(k, n)) c.elems[k].push_back(m.v);
  return c;
}

namespace {

TruncatedSimplicialSet tss_from_codec(const DeltaCodec& c, int depth) {
  TruncatedSimplicialSet x;
  x.depth = depth;
  x.card.resize(depth + 1);
  for (int k = 0; k <= depth; ++k) x.card[k] = static_cast<int>(c.elems[k].size());
  x.allocate();
  for (int k = 1; k <= depth; ++k)
    for (int i = 0; i <= k; ++i)
      for (int e = 0; e < x.card[k]; ++e) {
        std::vector<int> w = c.elems[k][e];
        w.erase(w.begin() + i);
        x.face[k][i][e] = c.index(k - 1, w);
      }
  for (int k = 0; k < depth; ++k)
    for (int i = 0; i <= k; ++i)
      for (int e = 0; e < x.card[k]; ++e) {
        std::vector<int> w = c.elems[k][e];
        w.insert(w.begin() + i, w[i]);
        x.deg[k][i][e] = c.index(k + 1, w);
      }
  return x;
}

}  // namespace

TruncatedSimplicialSet standard_simplex(int n, int depth) {
  if (n < 0 || depth < 0) throw Error("InvalidArgument", "standard_simplex");
  return tss_from_codec(standard_simplex_codec(n, depth), depth);
}

SubcomplexResult subcomplex_of_delta(int n, int depth,
                                     const std::vector<std::vector<int>>& vertex_sets) {
  SubcomplexResult r;
  DeltaCodec ambient = standard_simplex_codec(n, depth);
  r.ambient = tss_from_codec(ambient, depth);
  r.codec.n = n;
  r.codec.elems.resize(depth + 1);
  std::vector<std::vector<int>> incl(depth + 1);
  for (int k = 0; k <= depth; ++k) {
    for (int e = 0; e < static_cast<int>(ambient.elems[k].size()); ++e) {
      const auto& vals = ambient.elems[k][e];
      bool keep = false;
      for (const auto& s : vertex_sets) {
        bool inside = true;
        for (int v : vals)
          if (!std::binary_search(s.begin(), s.end(), v)) {
            inside = false;
            break;
          }
        if (inside) {
          keep = true;
          break;
        }
      }
      if (keep) {
        r.codec.elems[k].push_back(vals);
        incl[k].push_back(e);
      }
    }
  }
  r.object = tss_from_codec(r.codec, depth);
  r.inclusion.source = &r.object;
  r.inclusion.target = &r.ambient;
  r.inclusion.component = std::move(incl);
  return r;
}

SubcomplexResult spine(int n, int depth) {
  if (n < 1 || depth < 1) throw Error("InvalidArgument", "spine");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 <= n; ++i) edges.push_back({i, i + 1});
  return subcomplex_of_delta(n, depth, edges);
}

void FiniteCategory::validate() const {
  auto fail = [](const std::string& w) { throw Error("InvalidCategory", w); };
  for (int m = 0; m < num_morphisms; ++m)
    if (src[m] < 0 || src[m] >= num_objects || tgt[m] < 0 || tgt[m] >= num_objects)
      fail("endpoint range");
  for (int o = 0; o < num_objects; ++o) {
    if (id[o] < 0 || id[o] >= num_morphisms || src[id[o]] != o || tgt[id[o]] != o)
      fail("identity endpoints");
  }
  for (int g = 0; g < num_morphisms; ++g)
    for (int f = 0; f < num_morphisms; ++f) {
      int c = comp[g][f];
      if (tgt[f] != src[g]) {
        if (c != -1) fail("spurious composite");
        continue;
      }
      if (c < 0 || c >= num_morphisms || src[c] != src[f] || tgt[c] != tgt[g])
        fail("composite endpoints");
    }
  for (int f = 0; f < num_morphisms; ++f) {
    if (comp[id[tgt[f]]][f] != f || comp[f][id[src[f]]] != f) fail("unit law");
  }
  for (int h = 0; h < num_morphisms; ++h)
    for (int g = 0; g < num_morphisms; ++g) {
      if (tgt[g] != src[h]) continue;
      for (int f = 0; f < num_morphisms; ++f) {
        if (tgt[f] != src[g]) continue;
        if (comp[h][comp[g][f]] != comp[comp[h][g]][f]) fail("associativity");
      }
    }
}

FiniteCategory FiniteCategory::linear(int n) {
  FiniteCategory c;
  c.num_objects = n + 1;
  // morphisms: pairs (a,b), a <= b, lexicographic
  std::map<std::pair<int, int>, int> idx;
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      idx[{a, b}] = c.num_morphisms++;
      c.src.push_back(a);
      c.tgt.push_back(b);
    }
  c.id.resize(c.num_objects);
  for (int a = 0; a <= n; ++a) c.id[a] = idx[{a, a}];
  c.comp.assign(c.num_morphisms, std::vector<int>(c.num_morphisms, -1));
  for (int g = 0; g < c.num_morphisms; ++g)
    for (int f = 0; f < c.num_morphisms; ++f)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = idx[{c.src[f], c.tgt[g]}];
  return c;
}

FiniteCategory FiniteCategory::terminal() { return linear(0); }

FiniteCategory FiniteCategory::cyclic_group(int order) {
  FiniteCategory c;
  c.num_objects = 1;
  c.num_morphisms = order;
  c.src.assign(order, 0);
  c.tgt.assign(order, 0);
  c.id = {0};
  c.comp.assign(order, std::vector<int>(order, -1));
  for (int g = 0; g < order; ++g)
    for (int f = 0; f < order; ++f) c.comp[g][f] = (g + f) % order;
  return c;
}

FiniteCategory FiniteCategory::commutative_square() {
  FiniteCategory c;
  c.num_objects = 4;  // objects (a,b) in [1]x[1], id = 2a+b
  std::map<std::pair<int, int>, int> idx;
  auto leq = [](int p, int q) {
    return (p / 2) <= (q / 2) && (p % 2) <= (q % 2);
  };
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (leq(p, q)) {
        idx[{p, q}] = c.num_morphisms++;
        c.src.push_back(p);
        c.tgt.push_back(q);
      }
  c.id.resize(4);
  for (int p = 0; p < 4; ++p) c.id[p] = idx[{p, p}];
  c.comp.assign(c.num_morphisms, std::vector<int>(c.num_morphisms, -1));
  for (int g = 0; g < c.num_morphisms; ++g)
    for (int f = 0; f < c.num_morphisms; ++f)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = idx[{c.src[f], c.tgt[g]}];
  return c;
}

NerveResult nerve_of_category(const FiniteCategory& c, int depth) {
  c.validate();
  NerveResult r;
  r.chains.resize(depth + 1);
  for (int o = 0; o < c.num_objects; ++o) r.chains[0].push_back({o});
  for (int k = 1; k <= depth; ++k) {
    if (k == 1) {
      for (int m = 0; m < c.num_morphisms; ++m) r.chains[1].push_back({m});
    } else {
      for (const auto& ch : r.chains[k - 1])
        for (int m = 0; m < c.num_morphisms; ++m)
          if (c.src[m] == c.tgt[ch.back()]) {
            auto e = ch;
            e.push_back(m);
            r.chains[k].push_back(std::move(e));
          }
    }
  }
  for (auto& lvl : r.chains) std::sort(lvl.begin(), lvl.end());

  TruncatedSimplicialSet& x = r.object;
  x.depth = depth;
  x.card.resize(depth + 1);
  for (int k = 0; k <= depth; ++k) x.card[k] = static_cast<int>(r.chains[k].size());
  x.allocate();
  auto chain_src = [&](const std::vector<int>& ch, int k) {
    return k == 0 ? ch[0] : c.src[ch[0]];
  };
  for (int k = 1; k <= depth; ++k)
    for (int e = 0; e < x.card[k]; ++e) {
      const auto& ch = r.chains[k][e];
      for (int i = 0; i <= k; ++i) {
        std::vector<int> w;
        if (k == 1) {
          w = {i == 0 ? c.tgt[ch[0]] : c.src[ch[0]]};
        } else if (i == 0) {
          w.assign(ch.begin() + 1, ch.end());
        } else if (i == k) {
          w.assign(ch.begin(), ch.end() - 1);
        } else {
          w.assign(ch.begin(), ch.end());
          w[i - 1] = c.comp[ch[i]][ch[i - 1]];
          w.erase(w.begin() + i);
        }
        x.face[k][i][e] = r.chain_index(k - 1, w);
      }
    }
  for (int k = 0; k < depth; ++k)
    for (int e = 0; e < x.card[k]; ++e) {
      const auto& ch = r.chains[k][e];
      for (int i = 0; i <= k; ++i) {
        std::vector<int> w;
        if (k == 0) {
          w = {c.id[ch[0]]};
        } else {
          w = ch;
          int obj = (i == k) ? c.tgt[ch.back()]
                             : (i == 0 ? chain_src(ch, k) : c.tgt[ch[i - 1]]);
          w.insert(w.begin() + i, c.id[obj]);
        }
        x.deg[k][i][e] = r.chain_index(k + 1, w);
      }
    }
  return r;
}

int NerveResult::chain_index(int k, const std::vector<int>& chain) const {
  const auto& lvl = chains[k];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), chain);
  if (it == lvl.end() || *it != chain) return -1;
  return static_cast<int>(it - lvl.begin());
}

void PosetDiagram::validate() const {
  for (const auto& r : rels) {
    if (r.from < 0 || r.from >= num_indices || r.to < 0 || r.to >= num_indices)
      throw Error("InvalidDiagram", "relation index");
    if (static_cast<int>(r.f.size()) != card[r.from])
      throw Error("InvalidDiagram", "relation arity");
    for (int v : r.f)
      if (v < 0 || v >= card[r.to]) throw Error("InvalidDiagram", "relation range");
  }
  // functoriality on chains whose composite is present
  for (const auto& a : rels)
    for (const auto& b : rels) {
      if (a.to != b.from) continue;
      for (const auto& c : rels) {
        if (c.from != a.from || c.to != b.to) continue;
        for (int x = 0; x < card[a.from]; ++x)
          if (b.f[a.f[x]] != c.f[x]) throw Error("InvalidDiagram", "functoriality");
      }
    }
}

std::vector<std::vector<int>> finite_limit(const PosetDiagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d.num_indices, -1);
  // Precompute, per index, the relations checkable once indices <= i assigned.
  std::vector<std::vector<const PosetDiagram::Rel*>> ready(d.num_indices);
  for (const auto& r : d.rels) ready[std::max(r.from, r.to)].push_back(&r);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d.num_indices) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < d.card[i]; ++v) {
      cur[i] = v;
      bool ok = true;
      for (const auto* r : ready[i])
        if (r->f[cur[r->from]] != cur[r->to]) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
    cur[i] = -1;
  };
  rec(rec, 0);
  return out;
}

PSegalResult p_segal_map(const TruncatedSimplicialSet& x,
                         const PolygonalDecomposition& p) {
  int n = p.n;
  int maxrank = 0;
  for (const auto& q : p.polygons)
    maxrank = std::max(maxrank, static_cast<int>(q.size()) - 1);
  if (x.depth < n || x.depth < maxrank)
    throw Error("DepthTooSmall", "p_segal_map needs depth >= n");

  PosetDiagram d;
  d.num_indices = static_cast<int>(p.polygons.size());
  d.card.resize(d.num_indices);
  for (int i = 0; i < d.num_indices; ++i)
    d.card[i] = x.card[p.polygons[i].size() - 1];
  for (int i = 0; i < d.num_indices; ++i)
    for (int j = 0; j < d.num_indices; ++j) {
      if (i == j) continue;
      const auto& small = p.polygons[i];
      const auto& big = p.polygons[j];
      if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
        continue;
      // restriction X_{|big|-1} -> X_{|small|-1}
      std::vector<int> positions;
      for (int v : small)
        positions.push_back(static_cast<int>(
            std::lower_bound(big.begin(), big.end(), v) - big.begin()));
      MonotoneMap theta(static_cast<int>(small.size()) - 1,
                        static_cast<int>(big.size()) - 1, positions);
      PosetDiagram::Rel r;
      r.from = j;
      r.to = i;
      r.f.resize(d.card[j]);
      for (int e = 0; e < d.card[j]; ++e) r.f[e] = x.act(theta, e);
      d.rels.push_back(std::move(r));
    }

  PSegalResult res;
  res.limit = finite_limit(d);
  std::map<std::vector<int>, int> limit_index;
  for (int i = 0; i < static_cast<int>(res.limit.size()); ++i)
    limit_index[res.limit[i]] = i;
  res.to_limit.resize(x.card[n]);
  std::vector<int> hits(res.limit.size(), 0);
  for (int e = 0; e < x.card[n]; ++e) {
    std::vector<int> fam(d.num_indices);
    for (int i = 0; i < d.num_indices; ++i) {
      MonotoneMap theta = MonotoneMap::vertex_inclusion(p.polygons[i], n);
      fam[i] = x.act(theta, e);
    }
    auto it = limit_index.find(fam);
    if (it == limit_index.end()) throw Error("Internal", "p_segal image not in limit");
    res.to_limit[e] = it->second;
    ++hits[it->second];
  }
  res.bijective = true;
  for (int h : hits)
    if (h != 1) res.bijective = false;
  if (res.limit.size() != static_cast<size_t>(x.card[n]) && res.bijective)
    res.bijective = false;
  return res;
}

}  // namespace sdot
