#pragma once

#include <utility>
#include <vector>

#include "hypersplit/lifting.hpp"
#include "hypersplit/subset.hpp"

namespace hypersplit {

// Strictly ascending flats F_1 ⊊ ... ⊊ F_k with ranks 0 <= r_1 < ... < r_k,
// r_l < |F_l|.  Defines the transversal-free ("nested") matroid whose bases
// are the d-sets S with |S ∩ F_l| <= r_l for all l, d = r_k + |[n] - F_k|.
struct RankedChain {
  int n = 0;
  std::vector<Subset> flats;
  std::vector<int> ranks;

  void validate() const;
  int rank() const;  // r_k + number of elements outside F_k
};

// Blocks partitioning {1..n} with ranks 0 < d_i < |C_i|.  Defines the direct
// sum of uniform matroids U(d_i, C_i).
struct RankedPartition {
  int n = 0;
  std::vector<Subset> blocks;
  std::vector<int> ranks;

  void validate() const;
  int k() const { return static_cast<int>(blocks.size()); }
  int total_rank() const;
};

// Matroid on {1..n} given by its list of bases (all of size d), stored in
// colex order.  The constructor checks shape only (nonempty, uniform size,
// within the ground set); the basis-exchange axiom is guaranteed by the
// family constructors below and checked for foreign data by is_matroid().
class Matroid {
 public:
  Matroid(int n, int d, std::vector<Subset> bases);

  int ground_size() const { return n_; }
  int rank() const { return d_; }
  const std::vector<Subset>& bases() const { return bases_; }

  bool is_basis(const Subset& s) const;
  // Rank of an arbitrary subset: max over bases of |B ∩ S|.
  int rank_of(const Subset& s) const;

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_;
  }

 private:
  int n_;
  int d_;
  std::vector<Subset> bases_;
};

Matroid uniform(int d, int n);
Matroid partition_matroid(const RankedPartition& p);
Matroid nested_matroid(const RankedChain& c);

// Basis-exchange check over an explicit family of d-subsets of {1..n}.
bool is_matroid(int n, int d, const std::vector<Subset>& family);

// Heights ρ(S) = d - rank(S) on all d-subsets, colex order.
Lifting corank_vector(const Matroid& m);

struct MatroidComponents {
  std::vector<Subset> components;  // connected components, sorted by min element
  Subset loops;
  Subset coloops;
};

// Components via circuit connectivity, cross-checked against the rank of the
// basis-exchange-graph incidence span; throws std::logic_error on mismatch.
MatroidComponents connected_components(const Matroid& m);

struct MinorResult {
  Matroid matroid;          // on ground set {1..n'}, n' = |restrict_to - contract|
  std::vector<int> ground_map;  // ground_map[i-1] = original element for new label i
};

// Restriction to restrict_to followed by contraction of contract
// (contract ⊆ restrict_to), ground set compressed order-preservingly.
MinorResult minor(const Matroid& m, const Subset& restrict_to, const Subset& contract);

// All flats that are unions of circuits (no coloops in the restriction),
// with their ranks; sorted by (size, colex).  ∅ appears iff the matroid is
// loop-free.
std::vector<std::pair<Subset, int>> cyclic_flats(const Matroid& m);

}  // namespace hypersplit
