#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdot {

// Error with a stable machine-readable code ("DepthTooSmall", ...) plus detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A weakly increasing map [k] -> [n], k = dom, n = cod.
struct MonotoneMap {
  int dom = 0;  // domain is [dom] = {0,...,dom}
  int cod = 0;
  std::vector<int> v;  // size dom+1, values in [0,cod]

  MonotoneMap() = default;
  MonotoneMap(int d, int c, std::vector<int> vals);

  bool is_valid() const;
  bool is_identity() const;

  static MonotoneMap identity(int n);
  // d^i : [n-1] -> [n], skipping i (0 <= i <= n, n >= 1)
  static MonotoneMap coface(int i, int n);
  // s^i : [n+1] -> [n], repeating i (0 <= i <= n)
  static MonotoneMap codegeneracy(int i, int n);
  // alpha^i : [0] -> [n], 0 |-> i
  static MonotoneMap alpha(int i, int n);
  // beta^i : [1] -> [n], 0,1 |-> i,i+1
  static MonotoneMap beta(int i, int n);
  // inclusion of a sorted vertex subset S of [n] as [|S|-1] -> [n]
  static MonotoneMap vertex_inclusion(const std::vector<int>& verts, int n);

  bool operator==(const MonotoneMap& o) const {
    return dom == o.dom && cod == o.cod && v == o.v;
  }
};

// g o f, where f: [k] -> [m], g: [m] -> [n].
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

// All monotone maps [k] -> [n] in lexicographic order of value vectors.
std::vector<MonotoneMap> enumerate_monotone(int k, int n);

// Lexicographic rank of a monotone map among enumerate_monotone(dom, cod).
int monotone_rank(const MonotoneMap& m);

// Epi-mono factorization theta = mono o epi.
//   epi_drops: positions j (each in the coordinates of the current, shrinking
//     domain) such that theta = ... o s^{j}; apply contravariant degeneracies
//     in reverse order of this list.
//   mono_misses: values missing from the image, in decreasing order; apply
//     contravariant faces in this order.
struct Factorization {
  std::vector<int> epi_drops;
  std::vector<int> mono_misses;
};
Factorization factor_epi_mono(const MonotoneMap& theta);

std::int64_t binomial(int n, int k);
std::int64_t catalan(int n);

std::string to_string(const MonotoneMap& m);

}  // namespace sdot
