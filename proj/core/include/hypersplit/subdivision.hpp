#pragma once

#include <vector>

#include "hypersplit/lifting.hpp"
#include "hypersplit/matroid.hpp"
#include "hypersplit/rational.hpp"
#include "hypersplit/subset.hpp"

namespace hypersplit {

// N distinct rational points in m-space.
struct PointConfiguration {
  int m = 0;
  std::vector<std::vector<Rat>> points;

  PointConfiguration() = default;
  PointConfiguration(int m_, std::vector<std::vector<Rat>> pts);

  int size() const { return static_cast<int>(points.size()); }
  bool operator==(const PointConfiguration& o) const { return m == o.m && points == o.points; }
};

// Vertices of the hypersimplex: indicator vectors of the d-subsets of {1..n}
// in colex order, in R^n.
PointConfiguration hypersimplex_configuration(int d, int n);

// Vertices of the product of a (d-1)-simplex and an (l-1)-simplex: points
// e_a ⊕ e_b in R^{d+l} for a in [d], b in [l], ordered a-major then b.
PointConfiguration product_configuration(int d, int l);

struct SubdivisionCell {
  std::vector<int> points;  // 0-based indices into the configuration, ascending
  // Affine witness g(x) = witness[0]*x_1 + ... + witness[m-1]*x_m + witness[m]:
  // g equals the height on the cell's points and is strictly below elsewhere.
  // Empty for subdivisions assembled from external cell data.
  std::vector<Rat> witness;
};

struct Subdivision {
  PointConfiguration config;
  std::vector<Rat> heights;
  std::vector<SubdivisionCell> cells;  // sorted by point-index lists
};

// Maximal cells of the regular subdivision induced by lifting each point to
// its height and taking the lower convex hull.  Points lifted strictly above
// the hull appear in no cell.  Every returned cell carries an affine witness,
// re-verified against the definition before returning.
Subdivision regular_subdivision(const PointConfiguration& pc, const std::vector<Rat>& heights);

// Wraps externally supplied cells (no witnesses); validates index ranges,
// non-empty distinct cells, and height count.
Subdivision subdivision_from_cells(const PointConfiguration& pc, const std::vector<Rat>& heights,
                                   const std::vector<std::vector<int>>& cells);

// Set equality of maximal-cell index sets; requires identical configurations.
bool subdivisions_equal(const Subdivision& a, const Subdivision& b);

// Regular subdivision of the hypersimplex vertices under the corank heights
// d - rank(S); contains the matroid's basis set as a cell.
Subdivision corank_subdivision(const Matroid& m);

// For subdivisions of the full hypersimplex vertex set: do all maximal cells
// satisfy basis exchange?  Throws if the configuration is not a hypersimplex.
bool is_matroid_subdivision(const Subdivision& s);

// Three-term Plücker relations: for every (d-2)-set S and i<j<k<l outside S,
// the minimum of p(Sij)+p(Skl), p(Sik)+p(Sjl), p(Sil)+p(Sjk) is attained at
// least twice.  Vacuously true for d <= 1 or d >= n-1.
bool is_tropical_plucker(const Lifting& p);

struct LinearityResult {
  int dimension = 0;    // dim of the space of liftings refined by the subdivision
  bool is_coarsest = false;  // dimension == affine-hull dim + 2 (one ray + lineality)
};

// Dimension of { height vectors w : each cell admits an affine function
// agreeing with w on all its points }, by exact null-space computation.
// Requires every point to lie in some cell.
LinearityResult secondary_linearity_dimension(const PointConfiguration& pc, const Subdivision& s);

// Do the corank cells through the basis set cover every vertex?  True iff each
// d-subset lies in a maximal cell that meets the matroid's bases.
bool verify_corank_covering(const Matroid& m);

// Convert a cell of a hypersimplex subdivision to its d-subsets.
std::vector<Subset> cell_subsets(const Subdivision& s, const std::vector<int>& cell);

// Indices (subset of `cell`) of the vertices of the cell's convex hull in
// counter-clockwise order; configuration must be 2-dimensional.
std::vector<int> convex_hull_2d(const PointConfiguration& pc, const std::vector<int>& cell);

}  // namespace hypersplit
