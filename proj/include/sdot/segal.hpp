#pragma once

#include <string>
#include <vector>

#include "sdot/simpset.hpp"

namespace sdot {

enum class SimplicialProperty {
  segal,
  twosegal_full,
  twosegal_reduced,
  unital_full,
  unital_reduced,
  reduced,
};

SimplicialProperty simplicial_property_from_string(const std::string& s);
std::string to_string(SimplicialProperty p);

struct Witness {
  int level = 0;           // the simplicial/bisimplicial level of the failure
  std::string context;     // which comparison map (triangulation, square, ...)
  std::vector<int> element;  // the limit element with bad preimage count
  int preimages = 0;
};

struct CheckReport {
  std::string property;
  bool verdict = false;
  std::vector<Witness> witnesses;
  int failure_count = 0;  // total failing limit elements, all comparison maps
};

CheckReport check_simplicial(const TruncatedSimplicialSet& x,
                             SimplicialProperty property, int up_to);

// Shared helper: bijectivity of x |-> legs(x) onto {(a,b) : f(a) == g(b)}.
// Used by the reduced/unital checks here and the preaug checks.
struct FiberMapCheck {
  bool bijective = true;
  std::vector<std::pair<std::vector<int>, int>> bad;  // (pair, preimage count)
};
FiberMapCheck check_fiber_bijection(
    int domain_card,
    const std::vector<int>& leg_a, const std::vector<int>& leg_b,
    int card_a, int card_b,
    const std::vector<int>& f_a, const std::vector<int>& f_b);

}  // namespace sdot
