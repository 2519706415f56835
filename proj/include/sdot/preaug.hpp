#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdot/doublecat.hpp"
#include "sdot/monotone.hpp"
#include "sdot/segal.hpp"

namespace sdot {

// A morphism of the truncated index category Sigma = Delta x Delta + [-1].
// Either a pair of monotone maps (k,l) -> (q,r), or the unique map
// (q,r) -> [-1], or the identity of [-1].
struct SigmaMap {
  enum Kind { Pair, ToMinusOne, IdMinusOne } kind = Pair;
  MonotoneMap h, v;  // Pair: components; ToMinusOne: h.dom/v.dom give (q,r)
  int q = 0, r = 0;  // ToMinusOne: source bidegree

  static SigmaMap pair(MonotoneMap hm, MonotoneMap vm) {
    SigmaMap s;
    s.kind = Pair;
    s.h = std::move(hm);
    s.v = std::move(vm);
    return s;
  }
  static SigmaMap to_minus_one(int q, int r) {
    SigmaMap s;
    s.kind = ToMinusOne;
    s.q = q;
    s.r = r;
    return s;
  }
};

SigmaMap compose(const SigmaMap& g, const SigmaMap& f);  // g o f

// Finite presheaf on truncated Sigma: levels Y_{k,l} for 0 <= k,l <= depth
// plus Y_{-1}; generator maps stored, arbitrary actions by factorization.
// The augmentation map Y_{-1} -> Y_{0,0} is the contravariant image of the
// unique Sigma-morphism (0,0) -> [-1].
struct PreaugBisimplicialSet {
  int depth = 0;
  std::vector<std::vector<int>> card;  // card[k][l]
  int card_m1 = 0;
  // hface[k][l][i] : Y_{k,l} -> Y_{k-1,l}   (k >= 1, 0 <= i <= k)
  // vface[k][l][j] : Y_{k,l} -> Y_{k,l-1}   (l >= 1, 0 <= j <= l)
  // hdeg[k][l][i]  : Y_{k,l} -> Y_{k+1,l}   (k < depth, 0 <= i <= k)
  // vdeg[k][l][j]  : Y_{k,l} -> Y_{k,l+1}   (l < depth, 0 <= j <= l)
  std::vector<std::vector<std::vector<std::vector<int>>>> hface, vface, hdeg, vdeg;
  std::vector<int> aug;  // Y_{-1} -> Y_{0,0}

  void allocate();
  // contravariant action of theta = (f, g) : (f.dom, g.dom) -> (f.cod, g.cod)
  int act(const MonotoneMap& f, const MonotoneMap& g, int x) const;
  // contravariant action of the unique (q,r) -> [-1]: Y_{-1} -> Y_{q,r}
  int from_minus_one(int q, int r, int a) const;
  void validate() const;  // throws Error("InvalidPreaug")

  PreaugBisimplicialSet truncated(int new_depth) const;
};

struct PreaugMap {
  const PreaugBisimplicialSet* source = nullptr;
  const PreaugBisimplicialSet* target = nullptr;
  std::vector<std::vector<std::vector<int>>> component;  // [k][l]
  std::vector<int> component_m1;

  void validate() const;  // naturality over truncated Sigma
  bool operator<(const PreaugMap& o) const {
    return std::tie(component_m1, component) <
           std::tie(o.component_m1, o.component);
  }
  bool operator==(const PreaugMap& o) const {
    return component == o.component && component_m1 == o.component_m1;
  }
};

// representable Sigma[q,r]; element at (k,l) is rank(f)*|mono(l,r)|+rank(g)
PreaugBisimplicialSet representable(int q, int r, int depth);
PreaugBisimplicialSet representable_minus_one(int depth);  // Sigma[-1]

// Map of representables Sigma[q1,r1] -> Sigma[q2,r2] induced by
// (phi, psi): (q1,r1) -> (q2,r2) (postcomposition).
PreaugMap representable_map(const PreaugBisimplicialSet& src,
                            const PreaugBisimplicialSet& tgt, int q1, int r1,
                            int q2, int r2, const MonotoneMap& phi,
                            const MonotoneMap& psi);

// Level-wise pushout of b <- a -> c with canonical minimal-id representatives.
struct PushoutResult {
  PreaugBisimplicialSet object;
  PreaugBisimplicialSet b_copy, c_copy;  // owned copies of the inputs
  PreaugMap from_b, from_c;
};
PushoutResult preaug_pushout(const PreaugBisimplicialSet& a,
                             const PreaugBisimplicialSet& b,
                             const PreaugBisimplicialSet& c,
                             const PreaugMap& ab, const PreaugMap& ac);

// W[n]: level (k,l) = chains 0 <= i_0 <= ... <= i_k <= j_0 <= ... <= j_l <= n,
// level -1 = {(i,i)}; chains stored as concatenated vectors, sorted.
struct WPreaug {
  int n = 0;
  PreaugBisimplicialSet y;
  std::vector<std::vector<std::vector<std::vector<int>>>> chains;  // [k][l]
  int chain_index(int k, int l, const std::vector<int>& chain) const;
};
WPreaug generate_w_preaug(int n, int depth);

PreaugBisimplicialSet generate_h_preaug(int n, int depth);
PreaugBisimplicialSet generate_v_preaug(int n, int depth);

enum class PreaugKind { W, H, V };

// Augmented double nerve. Level (q,r) is the grid set Hom([q] box [r], D)
// (the underlying double nerve); level -1 is A(D), included along constant
// grids. For a strictly augmented stable D the levels agree with
// Hom_aug(W_{q+1+r}, D) via window restriction.
struct AugmentedNerve {
  PreaugBisimplicialSet y;
  // grids[q][r] = sorted grid functors [q] box [r] -> D; level (q,r) of y
  // indexes into it, level -1 indexes into the sorted augmentation set
  std::vector<std::vector<std::vector<DoubleFunctor>>> grids;
};
// grid_nerve builds the object for any valid D; augmented_nerve additionally
// requires check_double stable and augmented, else NotStableOrAugmented.
AugmentedNerve grid_nerve(const AugmentedDoubleCategory& d, int depth,
                          std::int64_t budget = kDefaultSearchBudget);
AugmentedNerve augmented_nerve(const AugmentedDoubleCategory& d, int depth,
                               std::int64_t budget = kDefaultSearchBudget);

enum class PreaugProperty {
  double_segal,
  stable_baby,
  stable_full,
  augmented_baby,
  augmented_full,
  pointed,
  split,
};
PreaugProperty preaug_property_from_string(const std::string& s);
std::string to_string(PreaugProperty p);

CheckReport check_preaug(const PreaugBisimplicialSet& y, PreaugProperty p);

// All natural transformations F -> Y over truncated Sigma (equal depths).
std::vector<PreaugMap> hom_preaug(const PreaugBisimplicialSet& f,
                                  const PreaugBisimplicialSet& y);

}  // namespace sdot
