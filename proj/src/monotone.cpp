#include "sdot/monotone.hpp"

#include <algorithm>

namespace sdot {

MonotoneMap::MonotoneMap(int d, int c, std::vector<int> vals)
    : dom(d), cod(c), v(std::move(vals)) {
  if (!is_valid()) throw Error("InvalidMonotoneMap", to_string(*this));
}

bool MonotoneMap::is_valid() const {
  if (dom < 0 || cod < 0 || static_cast<int>(v.size()) != dom + 1) return false;
  for (int i = 0; i <= dom; ++i) {
    if (v[i] < 0 || v[i] > cod) return false;
    if (i > 0 && v[i - 1] > v[i]) return false;
  }
  return true;
}

bool MonotoneMap::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i <= dom; ++i)
    if (v[i] != i) return false;
  return true;
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> vals(n + 1);
  for (int i = 0; i <= n; ++i) vals[i] = i;
  return MonotoneMap(n, n, std::move(vals));
}

MonotoneMap MonotoneMap::coface(int i, int n) {
  if (n < 1 || i < 0 || i > n) throw Error("InvalidMonotoneMap", "coface");
  std::vector<int> vals;
  vals.reserve(n);
  for (int j = 0; j <= n; ++j)
    if (j != i) vals.push_back(j);
  return MonotoneMap(n - 1, n, std::move(vals));
}

MonotoneMap MonotoneMap::codegeneracy(int i, int n) {
  if (i < 0 || i > n) throw Error("InvalidMonotoneMap", "codegeneracy");
  std::vector<int> vals;
  vals.reserve(n + 2);
  for (int j = 0; j <= n + 1; ++j) vals.push_back(j <= i ? j : j - 1);
  return MonotoneMap(n + 1, n, std::move(vals));
}

MonotoneMap MonotoneMap::alpha(int i, int n) {
  return MonotoneMap(0, n, {i});
}

MonotoneMap MonotoneMap::beta(int i, int n) {
  return MonotoneMap(1, n, {i, i + 1});
}

MonotoneMap MonotoneMap::vertex_inclusion(const std::vector<int>& verts, int n) {
  return MonotoneMap(static_cast<int>(verts.size()) - 1, n, verts);
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod != g.dom) throw Error("InvalidMonotoneMap", "compose rank mismatch");
  std::vector<int> vals(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) vals[i] = g.v[f.v[i]];
  return MonotoneMap(f.dom, g.cod, std::move(vals));
}

std::vector<MonotoneMap> enumerate_monotone(int k, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> cur(k + 1, 0);
  while (true) {
    out.push_back(MonotoneMap(k, n, cur));
    int i = k;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= k; ++j) cur[j] = cur[i];
  }
  return out;
}

int monotone_rank(const MonotoneMap& m) {
  // Count maps lexicographically smaller than m.
  // Maps [k]->[n] with a fixed prefix and free weakly-increasing tail of
  // length t starting at >= lo number C(n - lo + t, t).
  std::int64_t rank = 0;
  int k = m.dom, n = m.cod;
  int lo = 0;
  for (int i = 0; i <= k; ++i) {
    for (int c = lo; c < m.v[i]; ++c) {
      int t = k - i;
      rank += binomial(n - c + t, t);
    }
    lo = m.v[i];
  }
  return static_cast<int>(rank);
}

Factorization factor_epi_mono(const MonotoneMap& theta) {
  Factorization f;
  std::vector<int> w = theta.v;
  // Strip duplicates from the front repeatedly, recording positions.
  while (true) {
    int j = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[i] == w[i + 1]) {
        j = i;
        break;
      }
    if (j < 0) break;
    f.epi_drops.push_back(j);
    w.erase(w.begin() + j);
  }
  // w is now strictly increasing; missing values, decreasing.
  std::vector<bool> present(theta.cod + 1, false);
  for (int x : w) present[x] = true;
  for (int a = theta.cod; a >= 0; --a)
    if (!present[a]) f.mono_misses.push_back(a);
  return f;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int n) {
  return binomial(2 * n, n) / (n + 1);
}

std::string to_string(const MonotoneMap& m) {
  std::string s = "[" + std::to_string(m.dom) + "]->[" + std::to_string(m.cod) + "]:(";
  for (int i = 0; i <= m.dom; ++i) {
    if (i) s += ",";
    s += std::to_string(m.v[i]);
  }
  return s + ")";
}

}  // namespace sdot
