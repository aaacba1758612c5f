#include "hypersplit/multisplit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hypersplit {

namespace {

std::uint64_t encode_block(const Subset& block, int rank) {
  return (static_cast<std::uint64_t>(block.bits()) << 8) | static_cast<std::uint64_t>(rank);
}

// Lexicographic comparison of block-tuple sequences: blocks compare by their
// ascending element lists first, then by rank.
bool block_tuple_less(const Subset& ab, int ar, const Subset& bb, int br) {
  if (ab.bits() != bb.bits()) return lex_less_elements(ab, bb);
  return ar < br;
}

int canonical_rotation(const RankedPartition& p) {
  const int k = p.k();
  int best = 0;
  for (int cand = 1; cand < k; ++cand) {
    for (int off = 0; off < k; ++off) {
      const Subset &cb = p.blocks[(cand + off) % k], &bb = p.blocks[(best + off) % k];
      const int cr = p.ranks[(cand + off) % k], br = p.ranks[(best + off) % k];
      if (cb == bb && cr == br) continue;
      if (block_tuple_less(cb, cr, bb, br)) best = cand;
      break;
    }
  }
  return best;
}

RankedPartition rotate(const RankedPartition& p, int start) {
  RankedPartition out;
  out.n = p.n;
  const int k = p.k();
  for (int i = 0; i < k; ++i) {
    out.blocks.push_back(p.blocks[(start + i) % k]);
    out.ranks.push_back(p.ranks[(start + i) % k]);
  }
  return out;
}

std::uint64_t surjection_compositions(int n, int k) {
  // Ordered set partitions of an n-set into k non-empty blocks, as the
  // composition sum of multinomial coefficients.
  if (k < 0 || k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (int first = 1; first <= n - (k - 1); ++first)
    total += binomial(n, first) * surjection_compositions(n - first, k - 1);
  return total;
}

void enumerate_rest_blocks(int n, int d, int k, std::uint32_t remaining,
                           RankedPartition& acc, std::vector<MultiSplit>& out) {
  const int placed = acc.k();
  const int rank_so_far = acc.total_rank();
  if (placed == k - 1) {
    // Last block is forced: the remaining elements with the remaining rank.
    const int size = std::popcount(remaining);
    const int rank = d - rank_so_far;
    if (size < 2 || rank < 1 || rank >= size) return;
    acc.blocks.push_back(Subset(remaining, n));
    acc.ranks.push_back(rank);
    out.push_back(MultiSplit(acc));
    acc.blocks.pop_back();
    acc.ranks.pop_back();
    return;
  }
  const int blocks_left = k - placed;
  // Enumerate proper non-empty submasks of `remaining` as the next block.
  for (std::uint32_t sub = (remaining - 1) & remaining; sub; sub = (sub - 1) & remaining) {
    const int size = std::popcount(sub);
    if (size < 2) continue;
    if (std::popcount(remaining ^ sub) < 2 * (blocks_left - 1)) continue;
    for (int rank = 1; rank < size; ++rank) {
      if (rank_so_far + rank + (blocks_left - 1) > d) continue;
      if (d - rank_so_far - rank > /* max rank of rest */ std::popcount(remaining ^ sub) - (blocks_left - 1))
        continue;
      acc.blocks.push_back(Subset(sub, n));
      acc.ranks.push_back(rank);
      enumerate_rest_blocks(n, d, k, remaining ^ sub, acc, out);
      acc.blocks.pop_back();
      acc.ranks.pop_back();
    }
  }
}

void enumerate_b_partitions(int l, int k, std::uint32_t remaining, std::vector<Subset>& acc,
                            const std::vector<Subset>& a_blocks, int d,
                            std::vector<ProductSplit>& out) {
  const int placed = static_cast<int>(acc.size());
  if (placed == k - 1) {
    if (remaining == 0) return;
    acc.push_back(Subset(remaining, l));
    out.push_back(ProductSplit{d, l, a_blocks, acc});
    acc.pop_back();
    return;
  }
  const int blocks_left = k - placed;
  for (std::uint32_t sub = (remaining - 1) & remaining; sub; sub = (sub - 1) & remaining) {
    if (std::popcount(remaining ^ sub) < blocks_left - 1) continue;
    acc.push_back(Subset(sub, l));
    enumerate_b_partitions(l, k, remaining ^ sub, acc, a_blocks, d, out);
    acc.pop_back();
  }
}

void enumerate_a_partitions(int d, int k, std::uint32_t remaining, std::vector<Subset>& acc,
                            std::vector<std::vector<Subset>>& out) {
  const int placed = static_cast<int>(acc.size());
  if (placed == k - 1) {
    if (remaining == 0) return;
    acc.push_back(Subset(remaining, d));
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  const int blocks_left = k - placed;
  std::uint32_t first_anchor = placed == 0 ? 1u : 0u;  // block 1 must contain element 1
  for (std::uint32_t sub = (remaining - 1) & remaining;; sub = (sub - 1) & remaining) {
    if (sub == 0) break;
    if (placed == 0 && !(sub & first_anchor)) continue;
    if (std::popcount(remaining ^ sub) < blocks_left - 1) continue;
    acc.push_back(Subset(sub, d));
    enumerate_a_partitions(d, k, remaining ^ sub, acc, out);
    acc.pop_back();
  }
}

}  // namespace

MultiSplit::MultiSplit(RankedPartition partition) : partition_(std::move(partition)) {
  partition_.validate();
  if (partition_.k() < 2)
    throw std::invalid_argument("MultiSplit: at least two blocks required");
  partition_ = rotate(partition_, canonical_rotation(partition_));
}

std::vector<std::uint64_t> MultiSplit::encoding() const {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < k(); ++i)
    out.push_back(encode_block(partition_.blocks[i], partition_.ranks[i]));
  return out;
}

bool MultiSplit::operator==(const MultiSplit& o) const {
  return encoding() == o.encoding();
}

Matroid cell_from_chain(const RankedPartition& ordered) {
  ordered.validate();
  RankedChain chain;
  chain.n = ordered.n;
  std::uint32_t flat = 0;
  int rank = 0;
  for (int i = 0; i < ordered.k(); ++i) {
    flat |= ordered.blocks[i].bits();
    rank += ordered.ranks[i];
    chain.flats.push_back(Subset(flat, ordered.n));
    chain.ranks.push_back(rank);
  }
  return nested_matroid(chain);
}

Matroid cells_from_inequalities(const RankedPartition& ordered) {
  ordered.validate();
  const int n = ordered.n;
  const int d = ordered.total_rank();
  const int k = ordered.k();
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets_of_size(n, d)) {
    bool ok = true;
    int in_prefix = 0, rank_prefix = 0;
    for (int h = 0; h < k - 1 && ok; ++h) {
      in_prefix += std::popcount(s.bits() & ordered.blocks[h].bits());
      rank_prefix += ordered.ranks[h];
      ok = in_prefix <= rank_prefix;
    }
    if (ok) bases.push_back(s);
  }
  return Matroid(n, d, std::move(bases));
}

MultiSplitCells multisplit_cells(const MultiSplit& ms) {
  const RankedPartition& p = ms.partition();
  MultiSplitCells out{partition_matroid(p), {}};
  for (int t = 0; t < ms.k(); ++t) {
    RankedPartition rot;
    rot.n = p.n;
    for (int i = 0; i < ms.k(); ++i) {
      rot.blocks.push_back(p.blocks[(t + i) % ms.k()]);
      rot.ranks.push_back(p.ranks[(t + i) % ms.k()]);
    }
    out.maximal.push_back(cell_from_chain(rot));
  }
  return out;
}

std::uint64_t mu(int d, int n, int k, const std::vector<int>& alphas) {
  if (k < 1 || static_cast<int>(alphas.size()) != k - 1)
    throw std::invalid_argument("mu: need exactly k-1 alpha values");
  int sum = 0;
  for (int a : alphas) {
    if (a < 2) throw std::invalid_argument("mu: alpha values must be at least 2");
    sum += a;
  }
  const int alpha_k = n - sum;
  if (alpha_k < 2) throw std::invalid_argument("mu: last block size must be at least 2");

  std::vector<int> bounds(alphas);
  bounds.push_back(alpha_k);
  // Count x in Z^k with sum d and 0 < x_j < bounds[j].
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (int j = 0; j < k; ++j) {
    std::vector<std::uint64_t> next(d + 1, 0);
    for (int t = 0; t <= d; ++t) {
      if (ways[t] == 0) continue;
      for (int x = 1; x < bounds[j] && t + x <= d; ++x) next[t + x] += ways[t];
    }
    ways = std::move(next);
  }
  return ways[d];
}

std::uint64_t count_multisplits_formula(int d, int n, int k) {
  if (n < 1 || n > Subset::kMaxGround || d < 1 || d >= n)
    throw std::invalid_argument("count_multisplits_formula: parameters out of range");
  if (k < 2 || k > std::min(d, n - d))
    throw std::invalid_argument("count_multisplits_formula: need 2 <= k <= min(d, n-d)");

  std::uint64_t total = 0;
  std::vector<int> alphas(k - 1, 0);
  // Nested sums over alpha_1..alpha_{k-1}, each >= 2, leaving >= 2 per later block.
  auto rec = [&](auto&& self, int j, int beta, std::uint64_t coeff) -> void {
    if (j == k - 1) {
      total += coeff * mu(d, n, k, alphas);
      return;
    }
    for (int a = 2; a <= beta - 2 * (k - 1 - j); ++a) {
      alphas[j] = a;
      self(self, j + 1, beta - a, coeff * binomial(beta, a));
    }
  };
  rec(rec, 0, n, 1);
  if (total % static_cast<std::uint64_t>(k) != 0)
    throw std::logic_error("count_multisplits_formula: sum not divisible by k");
  return total / static_cast<std::uint64_t>(k);
}

std::vector<MultiSplit> enumerate_multisplits(int d, int n, int k, bool allow_large) {
  if (n < 1 || n > Subset::kMaxGround || d < 1 || d >= n)
    throw std::invalid_argument("enumerate_multisplits: parameters out of range");
  if (k < 2 || k > std::min(d, n - d))
    throw std::invalid_argument("enumerate_multisplits: need 2 <= k <= min(d, n-d)");
  if (n > 10 && !allow_large)
    throw std::invalid_argument("enumerate_multisplits: n > 10 requires the large-run override");

  // Generate canonical representatives directly: the block containing element 1
  // comes first, remaining blocks in all orders.
  std::vector<MultiSplit> out;
  const std::uint32_t full = Subset::full_set(n).bits();
  for (std::uint32_t first = full; first; first = (first - 1) & full) {
    if (!(first & 1u)) continue;  // must contain element 1
    const int size = std::popcount(first);
    if (size < 2 || std::popcount(full ^ first) < 2 * (k - 1)) continue;
    for (int rank = 1; rank < size; ++rank) {
      if (rank + (k - 1) > d || d - rank > n - size - (k - 1)) continue;
      RankedPartition acc;
      acc.n = n;
      acc.blocks.push_back(Subset(first, n));
      acc.ranks.push_back(rank);
      enumerate_rest_blocks(n, d, k, full ^ first, acc, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const MultiSplit& a, const MultiSplit& b) {
    return a.encoding() < b.encoding();
  });
  return out;
}

bool ProductSplit::operator==(const ProductSplit& o) const {
  return d == o.d && l == o.l && a_blocks == o.a_blocks && b_blocks == o.b_blocks;
}

std::uint64_t count_product_multisplits_formula(int d, int l, int k) {
  if (d < 1 || l < 1 || d > Subset::kMaxGround || l > Subset::kMaxGround)
    throw std::invalid_argument("count_product_multisplits_formula: parameters out of range");
  if (k < 2 || k > std::min(d, l))
    throw std::invalid_argument("count_product_multisplits_formula: need 2 <= k <= min(d, l)");
  const std::uint64_t total = surjection_compositions(d, k) * surjection_compositions(l, k);
  if (total % static_cast<std::uint64_t>(k) != 0)
    throw std::logic_error("count_product_multisplits_formula: sum not divisible by k");
  return total / static_cast<std::uint64_t>(k);
}

std::vector<ProductSplit> enumerate_product_multisplits(int d, int l, int k) {
  if (d < 1 || l < 1 || d > Subset::kMaxGround || l > Subset::kMaxGround)
    throw std::invalid_argument("enumerate_product_multisplits: parameters out of range");
  if (k < 2)
    throw std::invalid_argument("enumerate_product_multisplits: need k >= 2");
  if (k > std::min(d, l)) return {};  // rank bounds unsatisfiable: nothing to list

  std::vector<std::vector<Subset>> a_parts;
  std::vector<Subset> acc_a;
  enumerate_a_partitions(d, k, Subset::full_set(d).bits(), acc_a, a_parts);

  std::vector<ProductSplit> out;
  for (const auto& ab : a_parts) {
    std::vector<Subset> acc_b;
    enumerate_b_partitions(l, k, Subset::full_set(l).bits(), acc_b, ab, d, out);
  }
  std::sort(out.begin(), out.end(), [](const ProductSplit& a, const ProductSplit& b) {
    auto key = [](const ProductSplit& p) {
      std::vector<std::uint64_t> v;
      for (int i = 0; i < p.k(); ++i)
        v.push_back((static_cast<std::uint64_t>(p.a_blocks[i].bits()) << 16) | p.b_blocks[i].bits());
      return v;
    };
    return key(a) < key(b);
  });
  return out;
}

MultiSplit product_split_to_multisplit(const ProductSplit& ps) {
  RankedPartition p;
  p.n = ps.d + ps.l;
  for (int i = 0; i < ps.k(); ++i) {
    std::uint32_t bits = ps.a_blocks[i].bits() |
                         (static_cast<std::uint32_t>(ps.b_blocks[i].bits()) << ps.d);
    p.blocks.push_back(Subset(bits, p.n));
    p.ranks.push_back(ps.a_blocks[i].size());
  }
  return MultiSplit(p);
}

std::vector<SymmetryClass> symmetry_classes(int d, int n, int k) {
  std::vector<MultiSplit> all = enumerate_multisplits(d, n, k);
  // Orbit invariant: the cyclic sequence of (block size, rank) pairs, keyed by
  // its lexicographically least rotation.
  auto key_of = [](const MultiSplit& ms) {
    const RankedPartition& p = ms.partition();
    const int kk = ms.k();
    std::vector<std::pair<int, int>> seq;
    for (int i = 0; i < kk; ++i) seq.push_back({p.blocks[i].size(), p.ranks[i]});
    std::vector<std::pair<int, int>> best = seq;
    for (int s = 1; s < kk; ++s) {
      std::vector<std::pair<int, int>> rot;
      for (int i = 0; i < kk; ++i) rot.push_back(seq[(s + i) % kk]);
      if (rot < best) best = rot;
    }
    return best;
  };
  std::map<std::vector<std::pair<int, int>>, SymmetryClass> classes;
  for (const MultiSplit& ms : all) {
    auto key = key_of(ms);
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(key, SymmetryClass{ms, 1});
    else
      it->second.orbit_size += 1;
  }
  std::vector<SymmetryClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace hypersplit
