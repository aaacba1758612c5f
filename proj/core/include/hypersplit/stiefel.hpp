#pragma once

#include <optional>
#include <vector>

#include "hypersplit/lifting.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/rational.hpp"
#include "hypersplit/subdivision.hpp"
#include "hypersplit/subset.hpp"

namespace hypersplit {

// Height table lambda(i, j) on the vertices (e_i, e_j) of the product of a
// simplex on a base d-set I with a simplex on its complement.
struct ProductLifting {
  int n = 0;
  Subset base;               // |base| = d
  std::vector<Rat> lambda;   // row-major: i over base ascending, j over complement ascending

  ProductLifting(int n_, Subset base_);

  int d() const { return base.size(); }
  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;
  bool operator==(const ProductLifting& o) const {
    return n == o.n && base == o.base && lambda == o.lambda;
  }
};

// Exact minimum over all bijections of the row set onto the column set of the
// sum of picked entries; the empty table yields 0.  Exhaustive permutations up
// to size 4, exact-rational augmenting paths up to the supported bound of 8.
Rat assignment_min(const std::vector<std::vector<Rat>>& weights);

// Extend a product lifting to all d-subsets J of {1..n}: the height at J is
// the minimum-weight assignment between I - J and J - I.  The base gets 0 and
// single swaps I - i + j get lambda(i, j).
Lifting stiefel_lift(const ProductLifting& pl);

// Restrict a hypersimplex lifting to the single-swap entries around a base
// d-set: lambda(i, j) = p(I - i + j) - p(I).
ProductLifting induced_product_lifting(const Lifting& p, const Subset& base);

// Does restricting the corank lifting of one maximal cell to `base` and
// re-extending it reproduce exactly the maximal cells of the multi-split?
// `base` must be a basis of the common cell.
bool verify_stiefel_roundtrip(const MultiSplit& ms, const Subset& base);

// Exhaustive search over 0/1 height tables on a product-of-simplices vertex
// configuration for one whose regular subdivision equals the target; requires
// d*l <= 20.  The result uses base {1..d} inside ground set {1..d+l}.
std::optional<ProductLifting> search_01_lifting(const Subdivision& target);

}  // namespace hypersplit
