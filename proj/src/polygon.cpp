#include "sdot/polygon.hpp"

#include <algorithm>
#include <set>

namespace sdot {

namespace {

bool crossing(std::pair<int, int> d1, std::pair<int, int> d2) {
  auto [a, b] = d1;
  auto [c, d] = d2;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool is_side(int n, int a, int b) {
  return b == a + 1 || (a == 0 && b == n);
}

// Faces of the (n+1)-gon cut out by a non-crossing diagonal set.
void split_faces(const std::vector<int>& verts,
                 const std::set<std::pair<int, int>>& diags,
                 std::vector<std::vector<int>>& out) {
  int m = static_cast<int>(verts.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // side of this sub-polygon
      if (diags.count({verts[i], verts[j]})) {
        std::vector<int> left(verts.begin() + i, verts.begin() + j + 1);
        std::vector<int> right(verts.begin(), verts.begin() + i + 1);
        right.insert(right.end(), verts.begin() + j, verts.end());
        split_faces(left, diags, out);
        split_faces(right, diags, out);
        return;
      }
    }
  out.push_back(verts);
}

}  // namespace

std::string PolygonalDecomposition::diagonal_string() const {
  std::string s = "{";
  for (size_t i = 0; i < diagonals.size(); ++i) {
    if (i) s += ",";
    s += "{" + std::to_string(diagonals[i].first) + "," +
         std::to_string(diagonals[i].second) + "}";
  }
  return s + "}";
}

PolygonalDecomposition decomposition_from_diagonals(
    int n, std::vector<std::pair<int, int>> diagonals) {
  if (n < 1) throw Error("InvalidDecomposition", "n >= 1 required");
  std::sort(diagonals.begin(), diagonals.end());
  for (auto& [a, b] : diagonals) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > n || a == b || is_side(n, a, b))
      throw Error("InvalidDecomposition", "not a diagonal");
  }
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j])
        throw Error("InvalidDecomposition", "duplicate diagonal");
      if (crossing(diagonals[i], diagonals[j]))
        throw Error("CrossingDiagonals", "crossing pair");
    }

  PolygonalDecomposition p;
  p.n = n;
  p.diagonals = diagonals;

  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  std::set<std::pair<int, int>> dset(diagonals.begin(), diagonals.end());
  split_faces(all, dset, p.maximal_polygons);
  std::sort(p.maximal_polygons.begin(), p.maximal_polygons.end());

  std::set<std::vector<int>> fam(p.maximal_polygons.begin(), p.maximal_polygons.end());
  for (auto [a, b] : diagonals) fam.insert({a, b});
  // close under non-empty intersections of size >= 2
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(fam.begin(), fam.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                              cur[j].end(), std::back_inserter(inter));
        if (inter.size() >= 2 && fam.insert(inter).second) grew = true;
      }
  }
  p.polygons.assign(fam.begin(), fam.end());
  return p;
}

PolygonalDecomposition validate_decomposition(
    int n, const std::vector<std::vector<int>>& polygons) {
  std::set<std::vector<int>> fam;
  for (auto q : polygons) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (q.size() < 2 || q.front() < 0 || q.back() > n)
      throw Error("InvalidDecomposition", "polygon out of range");
    fam.insert(q);
  }
  if (fam.empty()) throw Error("NotCovering", "empty family");

  // diagonals: every boundary chord of a member that is not a polygon side
  std::set<std::pair<int, int>> diags;
  for (const auto& q : fam) {
    int m = static_cast<int>(q.size());
    for (int i = 0; i < m; ++i) {
      int a = q[i], b = q[(i + 1) % m];
      if (i == m - 1) std::swap(a, b);  // closing chord q.front()..q.back()
      if (a > b) std::swap(a, b);
      if (!is_side(n, a, b)) diags.insert({a, b});
    }
    if (m == 2 && !is_side(n, q[0], q[1])) diags.insert({q[0], q[1]});
  }
  std::vector<std::pair<int, int>> dvec(diags.begin(), diags.end());
  for (size_t i = 0; i < dvec.size(); ++i)
    for (size_t j = i + 1; j < dvec.size(); ++j)
      if (crossing(dvec[i], dvec[j]))
        throw Error("CrossingDiagonals", "crossing pair " );

  // intersection closure on the given family
  std::vector<std::vector<int>> cur(fam.begin(), fam.end());
  for (size_t i = 0; i < cur.size(); ++i)
    for (size_t j = i + 1; j < cur.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                            cur[j].end(), std::back_inserter(inter));
      if (inter.size() >= 2 && !fam.count(inter))
        throw Error("NotIntersectionClosed", "missing intersection");
    }

  PolygonalDecomposition p = decomposition_from_diagonals(n, dvec);
  if (std::set<std::vector<int>>(p.polygons.begin(), p.polygons.end()) != fam)
    throw Error("NotCovering", "family does not match the faces of its diagonals");
  return p;
}

std::vector<PolygonalDecomposition> enumerate_triangulations(int n) {
  if (n < 2) throw Error("InvalidArgument", "enumerate_triangulations");
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!is_side(n, a, b)) all.push_back({a, b});
  std::vector<PolygonalDecomposition> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == n - 2) {
      out.push_back(decomposition_from_diagonals(n, cur));
      return;
    }
    for (size_t i = start; i < all.size(); ++i) {
      bool ok = true;
      for (const auto& d : cur)
        if (crossing(d, all[i])) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(all[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

PolygonalDecomposition trivial_decomposition(int n) {
  return decomposition_from_diagonals(n, {});
}

PolygonalDecomposition initial_triangle_decomposition(int n) {
  if (n < 3) throw Error("InvalidArgument", "initial_triangle_decomposition");
  return decomposition_from_diagonals(n, {{0, 2}});
}

PolygonalDecomposition final_triangle_decomposition(int n) {
  if (n < 3) throw Error("InvalidArgument", "final_triangle_decomposition");
  return decomposition_from_diagonals(n, {{n - 2, n}});
}

}  // namespace sdot
