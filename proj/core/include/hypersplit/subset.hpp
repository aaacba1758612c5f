#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersplit {

// Ground sets are {1,...,n} with n <= 16.  A subset is a bitmask in which bit
// e-1 stands for element e.  For subsets of equal size, ascending numeric
// order of masks coincides with colexicographic order on the element lists;
// that is the canonical order used for height vectors and catalogs.
class Subset {
 public:
  static constexpr int kMaxGround = 16;

  Subset() = default;
  Subset(std::uint32_t bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxGround)
      throw std::invalid_argument("Subset: ground set size out of range");
    if (n < 32 && (bits >> n) != 0)
      throw std::invalid_argument("Subset: element outside the ground set");
  }

  static Subset empty_set(int n) { return Subset(0, n); }
  static Subset full_set(int n) {
    return Subset(n == 0 ? 0u : ((1u << n) - 1u), n);
  }
  static Subset single(int e, int n) {
    if (e < 1 || e > n) throw std::invalid_argument("Subset: element out of range");
    return Subset(1u << (e - 1), n);
  }
  static Subset of(std::initializer_list<int> elems, int n) {
    std::uint32_t b = 0;
    for (int e : elems) {
      if (e < 1 || e > n) throw std::invalid_argument("Subset: element out of range");
      b |= 1u << (e - 1);
    }
    return Subset(b, n);
  }
  static Subset of(const std::vector<int>& elems, int n) {
    std::uint32_t b = 0;
    for (int e : elems) {
      if (e < 1 || e > n) throw std::invalid_argument("Subset: element out of range");
      b |= 1u << (e - 1);
    }
    return Subset(b, n);
  }

  std::uint32_t bits() const { return bits_; }
  int ground() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_set(n_).bits(); }

  bool contains(int e) const { return e >= 1 && e <= n_ && ((bits_ >> (e - 1)) & 1u); }
  bool subset_of(const Subset& o) const { return (bits_ & ~o.bits_) == 0; }

  Subset with(int e) const { return Subset(bits_ | Subset::single(e, n_).bits_, n_); }
  Subset without(int e) const { return Subset(bits_ & ~Subset::single(e, n_).bits_, n_); }
  Subset unite(const Subset& o) const { return Subset(bits_ | o.bits_, n_); }
  Subset meet(const Subset& o) const { return Subset(bits_ & o.bits_, n_); }
  Subset minus(const Subset& o) const { return Subset(bits_ & ~o.bits_, n_); }
  Subset complement() const { return Subset(full_set(n_).bits_ & ~bits_, n_); }

  // Smallest element, or 0 if empty.
  int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  // "{1,3,4}" or "{}" — element list in ascending order.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && a.n_ == b.n_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }
  // Colexicographic order for equal-size subsets over the same ground set.
  friend bool operator<(const Subset& a, const Subset& b) { return a.bits_ < b.bits_; }

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

// Lexicographic order on ascending element lists: the first element where the
// sets differ decides.  (Distinct from colex; used for canonical block order.)
inline bool lex_less_elements(const Subset& a, const Subset& b) {
  if (a.bits() == b.bits()) return false;
  std::uint32_t diff = a.bits() ^ b.bits();
  std::uint32_t low = diff & (~diff + 1u);
  return (a.bits() & low) != 0;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  static const auto table = [] {
    constexpr int kMax = 33;
    std::vector<std::vector<std::uint64_t>> c(kMax, std::vector<std::uint64_t>(kMax, 0));
    for (int i = 0; i < kMax; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
  }();
  if (n >= 33) throw std::invalid_argument("binomial: n too large");
  return table[n][k];
}

// All d-subsets of {1..n} in colexicographic order (ascending bitmask order).
inline std::vector<Subset> all_subsets_of_size(int n, int d) {
  if (n < 0 || n > Subset::kMaxGround || d < 0 || d > n)
    throw std::invalid_argument("all_subsets_of_size: bad parameters");
  std::vector<Subset> out;
  out.reserve(binomial(n, d));
  if (d == 0) {
    out.push_back(Subset::empty_set(n));
    return out;
  }
  std::uint32_t v = (1u << d) - 1u;
  const std::uint32_t limit = n == 32 ? 0 : (1u << n);
  while (v < limit) {
    out.push_back(Subset(v, n));
    std::uint32_t t = v | (v - 1);                       // Gosper's hack
    std::uint32_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;
    v = next;
  }
  return out;
}

// Position of S among the d-subsets of its ground set in colex order:
// sum over the ascending elements a_1 < ... < a_d of binomial(a_j - 1, j).
inline std::uint64_t colex_index(const Subset& s) {
  std::uint64_t idx = 0;
  int j = 1;
  for (int e : s.elements()) idx += binomial(e - 1, j++);
  return idx;
}

}  // namespace hypersplit
