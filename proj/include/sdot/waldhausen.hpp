#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdot/preaug.hpp"
#include "sdot/simpset.hpp"

namespace sdot {

// Ordinal sum p: Sigma -> Delta, (q,r) |-> [q+1+r], [-1] |-> [0].
struct OrdinalSum {
  static int object(int q, int r) { return q + 1 + r; }
  // p applied to a SigmaMap; for (q,r) -> [-1] this is the unique
  // [q+1+r] -> [0].
  static MonotoneMap apply(const SigmaMap& s);
  // exhaustive functoriality check p(s o t) = p(s) o p(t) on pairs of
  // composable Sigma-maps with all ranks <= max_rank
  static bool functorial(int max_rank);
};

// (P X)_{q,r} = X_{q+1+r}, (P X)_{-1} = X_0; bisimplicial depth
// M = (X.depth - 1) / 2 so every generator stays within range.
PreaugBisimplicialSet path_construction(const TruncatedSimplicialSet& x);

// W[theta]: W[a] -> W[b] induced by a monotone theta: [a] -> [b]
// (entry-wise on chains; (i,i) |-> (theta i, theta i) on level -1).
PreaugMap w_chain_map(const WPreaug& wa, const WPreaug& wb,
                      const MonotoneMap& theta);

// precomposition: phi o w, where w: F -> G and phi: G -> Y
PreaugMap compose_preaug(const PreaugMap& phi, const PreaugMap& w);

struct SdotPreaugResult {
  TruncatedSimplicialSet object;      // depth = up_to
  std::vector<WPreaug> ws;            // W[0] .. W[up_to] at depth y.depth
  std::vector<std::vector<PreaugMap>> homs;
};
// pre: y.depth >= up_to
SdotPreaugResult sdot_preaug(const PreaugBisimplicialSet& y, int up_to);

// S-construction of a double category: maps out of W[n] into the nerve.
// Level 0 is canonically A(D).
struct SdotDoubleResult {
  TruncatedSimplicialSet object;          // depth = up_to
  std::shared_ptr<AugmentedNerve> nerve;  // grid nerve at depth up_to
  SdotPreaugResult s;                     // homs reference nerve->y
};
SdotDoubleResult sdot_double(const AugmentedDoubleCategory& d, int up_to,
                             std::int64_t budget = kDefaultSearchBudget);

// The window inclusion Sigma[q,r] -> W[q+1+r]: at (k,l) the pair (f,g) goes
// to the chain (f(0..k), g(0..l)+q+1); empty on level -1.
struct WindowInclusion {
  int q = 0, r = 0, depth = 0;
  PreaugBisimplicialSet sigma;  // representable Sigma[q,r]
  WPreaug w;                    // W[q+1+r]
  std::vector<std::vector<std::vector<int>>> component;
  PreaugMap map() const;  // bound to the members above
};
WindowInclusion window_inclusion(int q, int r, int depth);

// unit at level n: x |-> (chain c |-> X(c)(x)), an element of
// sdot_preaug(path_construction(X))_n.
struct UnitResult {
  int up_to = 0;
  std::shared_ptr<PreaugBisimplicialSet> px;
  SdotPreaugResult s;
  std::vector<std::vector<int>> component;  // X_n -> s.object level n
  std::vector<bool> bijective;              // per level
  bool all_bijective = false;
};
UnitResult unit_map(const TruncatedSimplicialSet& x, int up_to);

// counit at (q,r): Hom(W[q+1+r], Y) -> Y_{q,r}, restriction along the window
// inclusion (evaluation at the chain (0..q, q+1..q+1+r)); level -1 is the
// Yoneda identification via W[0] = Sigma[-1].
struct CounitLevel {
  int q = 0, r = 0;
  std::vector<int> component;  // hom index -> Y_{q,r}
  bool bijective = false;
};
struct CounitResult {
  SdotPreaugResult s;  // homs[n] for n <= y.depth
  std::vector<CounitLevel> levels;  // all (q,r) with q+1+r <= y.depth
  std::vector<int> component_m1;
  bool m1_bijective = false;
  bool all_bijective = false;
};
CounitResult counit_map(const PreaugBisimplicialSet& y);

// triangle identities at all levels computable from the given depths
bool triangle_identity_pathside(const TruncatedSimplicialSet& x, int up_to);
bool triangle_identity_sdotside(const PreaugBisimplicialSet& y, int up_to);

struct RoundtripReport {
  std::string input_kind;       // "simplicial" or "double"
  bool theorem_expected = false;
  std::vector<std::pair<std::string, bool>> levels;  // label, bijective
  bool all_bijective = false;
};
RoundtripReport roundtrip_simplicial(const TruncatedSimplicialSet& x, int up_to);
RoundtripReport roundtrip_double(const AugmentedDoubleCategory& d, int up_to,
                                 std::int64_t budget = kDefaultSearchBudget);

}  // namespace sdot
