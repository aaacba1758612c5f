#pragma once

#include <cstdint>
#include <vector>

#include "hypersplit/matroid.hpp"
#include "hypersplit/subset.hpp"

namespace hypersplit {

// A k-split of the hypersimplex of d-subsets of {1..n}: a ranked partition
// whose block order carries cyclic meaning.  Construction normalizes to the
// canonical rotation — the one whose sequence of (sorted block elements, rank)
// encodings is lexicographically least, equivalently the rotation placing the
// block containing element 1 first.
class MultiSplit {
 public:
  explicit MultiSplit(RankedPartition partition);

  const RankedPartition& partition() const { return partition_; }
  int n() const { return partition_.n; }
  int d() const { return partition_.total_rank(); }
  int k() const { return partition_.k(); }

  // Per-block (bits, rank) encoding in canonical block order; total order key.
  std::vector<std::uint64_t> encoding() const;

  bool operator==(const MultiSplit& o) const;

 private:
  RankedPartition partition_;
};

struct MultiSplitCells {
  Matroid common;                // the partition matroid, intersection of all cells
  std::vector<Matroid> maximal;  // k nested matroids, one per cyclic rotation
};

// Maximal cell for one fixed rotation, built from the flag of block prefixes
// (a nested matroid by construction).
Matroid cell_from_chain(const RankedPartition& ordered);

// Same cell built independently from the cumulative-sum inequalities
// sum_{l<=h} |S ∩ C_l| <= sum_{l<=h} d_l for h < k.
Matroid cells_from_inequalities(const RankedPartition& ordered);

// All cells of the split: maximal[t] corresponds to the rotation starting at
// block t+1 of the canonical order.
MultiSplitCells multisplit_cells(const MultiSplit& ms);

// Number of integer vectors x in Z^k with sum x = d and 0 < x_j < alpha_j,
// where alphas lists alpha_1..alpha_{k-1} and alpha_k := n - sum(alphas).
std::uint64_t mu(int d, int n, int k, const std::vector<int>& alphas);

// Closed-form split count: (1/k) * sum over admissible alpha of
// mu(alpha) * prod_j C(beta_j, alpha_j), beta_j the remaining ground size.
std::uint64_t count_multisplits_formula(int d, int n, int k);

// All k-splits, one canonical representative per cyclic class, sorted by
// encoding.  Guarded to n <= 10 unless allow_large.
std::vector<MultiSplit> enumerate_multisplits(int d, int n, int k, bool allow_large = false);

// A k-split of the product of two simplices with d and l vertices: pairs
// (A_j ⊆ [d], B_j ⊆ [l]) partitioning both factors, modulo simultaneous
// cyclic rotation; canonical rotation places the A-block containing 1 first.
struct ProductSplit {
  int d = 0;
  int l = 0;
  std::vector<Subset> a_blocks;  // partition of [d]
  std::vector<Subset> b_blocks;  // partition of [l]

  int k() const { return static_cast<int>(a_blocks.size()); }
  bool operator==(const ProductSplit& o) const;
};

// Count = (ordered set partitions of [d] into k blocks) * (same for [l]) / k,
// evaluated as the double composition sum of multinomial products.
std::uint64_t count_product_multisplits_formula(int d, int l, int k);

std::vector<ProductSplit> enumerate_product_multisplits(int d, int l, int k);

// Block merge C_j = A_j ∪ (B_j shifted by d) with rank |A_j|: the induced
// split of the hypersimplex of d-subsets of {1..d+l}.
MultiSplit product_split_to_multisplit(const ProductSplit& ps);

struct SymmetryClass {
  MultiSplit representative;
  std::uint64_t orbit_size = 0;
};

// Orbits of the symmetric-group action on {1..n}; two splits are equivalent
// iff their cyclic sequences of (block size, rank) pairs agree up to rotation.
std::vector<SymmetryClass> symmetry_classes(int d, int n, int k);

}  // namespace hypersplit
