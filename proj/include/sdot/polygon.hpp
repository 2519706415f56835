#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdot/monotone.hpp"

namespace sdot {

// Polygonal decomposition of the (n+1)-gon with vertices 0..n, canonically
// represented by its set of pairwise non-crossing diagonals. The polygon
// family (faces cut out by the diagonals, the diagonals themselves, and all
// their intersections of size >= 2) is derived.
struct PolygonalDecomposition {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;     // sorted, a < b
  std::vector<std::vector<int>> polygons;         // sorted family of sorted subsets
  std::vector<std::vector<int>> maximal_polygons; // the faces

  std::string diagonal_string() const;
};

// Build from a diagonal set (validates non-crossing).
PolygonalDecomposition decomposition_from_diagonals(
    int n, std::vector<std::pair<int, int>> diagonals);

// Validate a user-supplied family. Throws Error with code CrossingDiagonals,
// NotIntersectionClosed, or NotCovering.
PolygonalDecomposition validate_decomposition(
    int n, const std::vector<std::vector<int>>& polygons);

// All triangulations, lexicographic on sorted diagonal sets.
std::vector<PolygonalDecomposition> enumerate_triangulations(int n);

PolygonalDecomposition trivial_decomposition(int n);

// The two special decompositions of the reduced 2-Segal criterion.
PolygonalDecomposition initial_triangle_decomposition(int n);  // {0,1,2} + {0,2,...,n}
PolygonalDecomposition final_triangle_decomposition(int n);    // {n-2,n-1,n} + {0..n-2,n}

}  // namespace sdot
