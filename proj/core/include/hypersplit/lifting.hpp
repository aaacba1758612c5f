#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypersplit/rational.hpp"
#include "hypersplit/subset.hpp"

namespace hypersplit {

// Height function on the vertices of the hypersimplex of d-subsets of {1..n}:
// one rational per d-subset, indexed in colex order.
struct Lifting {
  int n = 0;
  int d = 0;
  std::vector<Rat> heights;

  Lifting() = default;
  Lifting(int n_, int d_) : n(n_), d(d_), heights(binomial(n_, d_), Rat(0)) {
    if (d_ < 0 || d_ > n_ || n_ > Subset::kMaxGround)
      throw std::invalid_argument("Lifting: bad parameters");
  }

  Rat& at(const Subset& s) {
    check(s);
    return heights[colex_index(s)];
  }
  const Rat& at(const Subset& s) const {
    check(s);
    return heights[colex_index(s)];
  }

  bool operator==(const Lifting& o) const {
    return n == o.n && d == o.d && heights == o.heights;
  }

 private:
  void check(const Subset& s) const {
    if (s.ground() != n || s.size() != d)
      throw std::invalid_argument("Lifting: subset has wrong ground set or size");
  }
};

}  // namespace hypersplit
