#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sdot/monotone.hpp"

namespace sdot {

// Finite truncated simplicial set: levels X_0..X_depth, structure maps stored
// for the generating cofaces/codegeneracies only. Elements are opaque ids
// 0..card[k]-1 per level.
struct TruncatedSimplicialSet {
  int depth = 0;
  std::vector<int> card;  // card[k] = |X_k|, size depth+1
  // face[k][i] : X_k -> X_{k-1}, 1 <= k <= depth, 0 <= i <= k
  std::vector<std::vector<std::vector<int>>> face;
  // deg[k][i] : X_k -> X_{k+1}, 0 <= k < depth, 0 <= i <= k
  std::vector<std::vector<std::vector<int>>> deg;

  void allocate();  // size face/deg tables from depth and card
  // X(theta) applied to x in X_{theta.cod}; result in X_{theta.dom}.
  int act(const MonotoneMap& theta, int x) const;
  // No section of a proper codegeneracy hits the element.
  bool is_nondegenerate(int k, int x) const;
  std::vector<int> nondegenerate_count() const;  // per level
  // Throws Error("InvalidSimplicialSet") on a violated simplicial identity.
  void validate() const;
};

struct SimplicialMap {
  const TruncatedSimplicialSet* source = nullptr;
  const TruncatedSimplicialSet* target = nullptr;
  std::vector<std::vector<int>> component;  // per level

  void validate() const;  // commutes with generating maps
};

// Decodes level-k elements of a simplicial subset of some Delta[n] as
// monotone maps [k] -> [n].
struct DeltaCodec {
  int n = 0;
  // elems[k]: sorted list of value vectors of the level-k elements
  std::vector<std::vector<std::vector<int>>> elems;
  int index(int k, const std::vector<int>& vals) const;
  const std::vector<int>& values(int k, int id) const { return elems[k][id]; }
};

struct SubcomplexResult {
  TruncatedSimplicialSet object;
  TruncatedSimplicialSet ambient;
  SimplicialMap inclusion;  // object -> ambient (components owned here)
  DeltaCodec codec;         // for the subcomplex itself
};

TruncatedSimplicialSet standard_simplex(int n, int depth);
DeltaCodec standard_simplex_codec(int n, int depth);

// Simplicial subset of Delta[n] spanned by the simplices with image contained
// in one of the given vertex subsets.
SubcomplexResult subcomplex_of_delta(int n, int depth,
                                     const std::vector<std::vector<int>>& vertex_sets);

SubcomplexResult spine(int n, int depth);

struct FiniteCategory {
  int num_objects = 0;
  int num_morphisms = 0;
  std::vector<int> src, tgt;   // per morphism
  std::vector<int> id;         // per object
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, -1 if not composable

  void validate() const;  // throws Error("InvalidCategory")

  static FiniteCategory linear(int n);  // the poset category [n]
  static FiniteCategory terminal();
  static FiniteCategory cyclic_group(int order);  // one object, Z/order
  static FiniteCategory commutative_square();     // poset [1]x[1]
};

// Chains of composable morphisms; level 0 = objects.
struct NerveResult {
  TruncatedSimplicialSet object;
  // chain at level k: k morphism ids (level 0: one object id)
  std::vector<std::vector<std::vector<int>>> chains;
  int chain_index(int k, const std::vector<int>& chain) const;
};
NerveResult nerve_of_category(const FiniteCategory& c, int depth);

struct PosetDiagram {
  int num_indices = 0;
  std::vector<int> card;  // per index
  struct Rel {
    int from = 0, to = 0;
    std::vector<int> f;  // card[from] -> card[to]
  };
  std::vector<Rel> rels;

  void validate() const;  // functoriality along chains present in rels
};

// Families compatible with all relation maps, in lexicographic order.
std::vector<std::vector<int>> finite_limit(const PosetDiagram& d);

struct PolygonalDecomposition;  // polygon.hpp

struct PSegalResult {
  std::vector<std::vector<int>> limit;  // families over the polygon poset
  std::vector<int> to_limit;            // X_n -> index into limit
  bool bijective = false;
};
PSegalResult p_segal_map(const TruncatedSimplicialSet& x,
                         const PolygonalDecomposition& p);

}  // namespace sdot
