#include "hypersplit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hypersplit/rational.hpp"

namespace hypersplit {

namespace {

// Rank queries against an explicit basis list; memoized over all masks for
// small ground sets since connectivity and flat scans query densely.
class RankOracle {
 public:
  explicit RankOracle(const Matroid& m) : m_(m) {
    if (m.ground_size() <= 12) {
      table_.resize(std::size_t(1) << m.ground_size());
      for (std::size_t s = 0; s < table_.size(); ++s) {
        int best = 0;
        for (const Subset& b : m_.bases())
          best = std::max(best, std::popcount(static_cast<std::uint32_t>(s) & b.bits()));
        table_[s] = static_cast<signed char>(best);
      }
    }
  }

  int rank(std::uint32_t mask) const {
    if (!table_.empty()) return table_[mask];
    int best = 0;
    for (const Subset& b : m_.bases())
      best = std::max(best, std::popcount(mask & b.bits()));
    return best;
  }

 private:
  const Matroid& m_;
  std::vector<signed char> table_;
};

// Dimension of the span of { χ_B − χ_B0 : B basis } over Q, by incremental
// echelon reduction.  Independent of the circuit scan; used as a cross-check.
int basis_span_rank(const Matroid& m) {
  const int n = m.ground_size();
  const auto& bs = m.bases();
  std::vector<std::vector<Rat>> echelon;  // rows with recorded pivot columns
  std::vector<int> pivot_col;
  for (std::size_t i = 1; i < bs.size(); ++i) {
    std::vector<Rat> row(n, Rat(0));
    std::uint32_t b0 = bs[0].bits(), bi = bs[i].bits();
    for (int c = 0; c < n; ++c) {
      int vi = (bi >> c) & 1, v0 = (b0 >> c) & 1;
      if (vi != v0) row[c] = Rat(vi - v0);
    }
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      int p = pivot_col[r];
      if (row[p] != 0) {
        Rat f = row[p] / echelon[r][p];
        for (int c = 0; c < n; ++c) row[c] -= f * echelon[r][c];
      }
    }
    int p = -1;
    for (int c = 0; c < n; ++c)
      if (row[c] != 0) { p = c; break; }
    if (p >= 0) {
      echelon.push_back(std::move(row));
      pivot_col.push_back(p);
    }
  }
  return static_cast<int>(echelon.size());
}

}  // namespace

void RankedChain::validate() const {
  if (n < 1 || n > Subset::kMaxGround)
    throw std::invalid_argument("RankedChain: ground set size out of range");
  if (flats.empty() || flats.size() != ranks.size())
    throw std::invalid_argument("RankedChain: flats and ranks must be non-empty and aligned");
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].ground() != n)
      throw std::invalid_argument("RankedChain: flat over wrong ground set");
    if (ranks[i] < 0 || ranks[i] >= flats[i].size())
      throw std::invalid_argument("RankedChain: rank bound violated (need 0 <= r < |F|)");
    if (i > 0) {
      if (!flats[i - 1].subset_of(flats[i]) || flats[i - 1] == flats[i])
        throw std::invalid_argument("RankedChain: flats must be strictly ascending");
      if (ranks[i - 1] >= ranks[i])
        throw std::invalid_argument("RankedChain: ranks must be strictly increasing");
    }
  }
}

int RankedChain::rank() const {
  return ranks.back() + (n - flats.back().size());
}

void RankedPartition::validate() const {
  if (n < 1 || n > Subset::kMaxGround)
    throw std::invalid_argument("RankedPartition: ground set size out of range");
  if (blocks.empty() || blocks.size() != ranks.size())
    throw std::invalid_argument("RankedPartition: blocks and ranks must be non-empty and aligned");
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].ground() != n)
      throw std::invalid_argument("RankedPartition: block over wrong ground set");
    if (seen & blocks[i].bits())
      throw std::invalid_argument("RankedPartition: blocks must be pairwise disjoint");
    seen |= blocks[i].bits();
    if (ranks[i] <= 0 || ranks[i] >= blocks[i].size())
      throw std::invalid_argument("RankedPartition: rank bound violated (need 0 < d < |C|)");
  }
  if (seen != Subset::full_set(n).bits())
    throw std::invalid_argument("RankedPartition: blocks must cover the ground set");
}

int RankedPartition::total_rank() const {
  return std::accumulate(ranks.begin(), ranks.end(), 0);
}

Matroid::Matroid(int n, int d, std::vector<Subset> bases)
    : n_(n), d_(d), bases_(std::move(bases)) {
  if (n < 0 || n > Subset::kMaxGround || d < 0 || d > n)
    throw std::invalid_argument("Matroid: parameters out of range");
  if (bases_.empty()) throw std::invalid_argument("Matroid: empty basis list");
  for (const Subset& b : bases_) {
    if (b.ground() != n) throw std::invalid_argument("Matroid: basis over wrong ground set");
    if (b.size() != d) throw std::invalid_argument("Matroid: basis of wrong cardinality");
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Matroid::is_basis(const Subset& s) const {
  if (s.ground() != n_ || s.size() != d_) return false;
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank_of(const Subset& s) const {
  if (s.ground() != n_) throw std::invalid_argument("rank_of: subset over wrong ground set");
  int best = 0;
  for (const Subset& b : bases_)
    best = std::max(best, std::popcount(b.bits() & s.bits()));
  return best;
}

Matroid uniform(int d, int n) {
  if (n < 0 || n > Subset::kMaxGround || d < 0 || d > n)
    throw std::invalid_argument("uniform: parameters out of range");
  return Matroid(n, d, all_subsets_of_size(n, d));
}

Matroid partition_matroid(const RankedPartition& p) {
  p.validate();
  int d = p.total_rank();
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets_of_size(p.n, d)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.blocks.size() && ok; ++i)
      ok = std::popcount(s.bits() & p.blocks[i].bits()) == p.ranks[i];
    if (ok) bases.push_back(s);
  }
  return Matroid(p.n, d, std::move(bases));
}

Matroid nested_matroid(const RankedChain& c) {
  c.validate();
  int d = c.rank();
  std::vector<Subset> bases;
  for (const Subset& s : all_subsets_of_size(c.n, d)) {
    bool ok = true;
    for (std::size_t i = 0; i < c.flats.size() && ok; ++i)
      ok = std::popcount(s.bits() & c.flats[i].bits()) <= c.ranks[i];
    if (ok) bases.push_back(s);
  }
  if (bases.empty())
    throw std::invalid_argument("nested_matroid: chain admits no basis (rank increments exceed flat increments)");
  return Matroid(c.n, d, std::move(bases));
}

bool is_matroid(int n, int d, const std::vector<Subset>& family) {
  if (n < 0 || n > Subset::kMaxGround || d < 0 || d > n)
    throw std::invalid_argument("is_matroid: parameters out of range");
  if (family.empty()) throw std::invalid_argument("is_matroid: empty family");
  for (const Subset& s : family) {
    if (s.ground() != n) throw std::invalid_argument("is_matroid: subset over wrong ground set");
    if (s.size() != d) throw std::invalid_argument("is_matroid: size mismatch among subsets");
  }
  std::vector<Subset> fam = family;
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  auto member = [&](std::uint32_t bits) {
    return std::binary_search(fam.begin(), fam.end(), Subset(bits, n));
  };
  for (const Subset& b1 : fam)
    for (const Subset& b2 : fam) {
      std::uint32_t only1 = b1.bits() & ~b2.bits();
      for (std::uint32_t i = only1; i; i &= i - 1) {
        std::uint32_t ibit = i & (~i + 1u);
        bool found = false;
        std::uint32_t only2 = b2.bits() & ~b1.bits();
        for (std::uint32_t j = only2; j && !found; j &= j - 1) {
          std::uint32_t jbit = j & (~j + 1u);
          found = member((b1.bits() ^ ibit) | jbit);
        }
        if (!found) return false;
      }
    }
  return true;
}

Lifting corank_vector(const Matroid& m) {
  Lifting out(m.ground_size(), m.rank());
  std::size_t idx = 0;
  for (const Subset& s : all_subsets_of_size(m.ground_size(), m.rank()))
    out.heights[idx++] = Rat(m.rank() - m.rank_of(s));
  return out;
}

MatroidComponents connected_components(const Matroid& m) {
  const int n = m.ground_size();
  RankOracle rk(m);

  std::uint32_t coloop_bits = Subset::full_set(n).bits();
  for (const Subset& b : m.bases()) coloop_bits &= b.bits();
  std::uint32_t loop_bits = 0;
  for (int e = 1; e <= n; ++e)
    if (rk.rank(1u << (e - 1)) == 0) loop_bits |= 1u << (e - 1);

  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Circuits: minimal dependent sets, found by exhaustive scan.
  const std::uint32_t limit = n == 0 ? 1 : (1u << n);
  for (std::uint32_t s = 1; s < limit; ++s) {
    int size = std::popcount(s);
    if (rk.rank(s) == size) continue;  // independent
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      std::uint32_t sub = s ^ (rest & (~rest + 1u));
      minimal = rk.rank(sub) == std::popcount(sub);
    }
    if (!minimal) continue;
    int first = std::countr_zero(s) + 1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1)
      unite(first, std::countr_zero(rest) + 1);
  }

  std::vector<std::uint32_t> comp_bits(n + 1, 0);
  for (int e = 1; e <= n; ++e) comp_bits[find(e)] |= 1u << (e - 1);
  MatroidComponents out{{}, Subset(loop_bits, n), Subset(coloop_bits, n)};
  for (int r = 1; r <= n; ++r)
    if (comp_bits[r]) out.components.push_back(Subset(comp_bits[r], n));
  std::sort(out.components.begin(), out.components.end(),
            [](const Subset& a, const Subset& b) { return a.min_element() < b.min_element(); });

  // Matroid polytope dimension cross-check: #components must equal
  // n - dim P(M), with dim P(M) the span of the basis-indicator differences.
  int dim = basis_span_rank(m);
  if (static_cast<int>(out.components.size()) != n - dim)
    throw std::logic_error("connected_components: circuit partition disagrees with polytope dimension");
  return out;
}

MinorResult minor(const Matroid& m, const Subset& restrict_to, const Subset& contract) {
  const int n = m.ground_size();
  if (restrict_to.ground() != n || contract.ground() != n)
    throw std::invalid_argument("minor: subsets over wrong ground set");
  if (!contract.subset_of(restrict_to))
    throw std::invalid_argument("minor: contract must be contained in restrict_to");

  std::vector<int> ground_map = restrict_to.minus(contract).elements();
  const int np = static_cast<int>(ground_map.size());
  const int rk_contract = m.rank_of(contract);
  const int dp = m.rank_of(restrict_to) - rk_contract;
  if (np == 0 && dp > 0)
    throw std::invalid_argument("minor: empty ground set cannot carry positive rank");

  std::vector<Subset> bases;
  for (const Subset& s : all_subsets_of_size(np, dp)) {
    std::uint32_t old_bits = contract.bits();
    for (int e : s.elements()) old_bits |= 1u << (ground_map[e - 1] - 1);
    if (m.rank_of(Subset(old_bits, n)) == dp + rk_contract) bases.push_back(s);
  }
  return MinorResult{Matroid(np, dp, std::move(bases)), std::move(ground_map)};
}

std::vector<std::pair<Subset, int>> cyclic_flats(const Matroid& m) {
  const int n = m.ground_size();
  RankOracle rk(m);
  std::vector<std::pair<Subset, int>> out;
  const std::uint32_t limit = n == 0 ? 1 : (1u << n);
  for (std::uint32_t f = 0; f < limit; ++f) {
    int r = rk.rank(f);
    bool flat = true;
    for (std::uint32_t rest = Subset::full_set(n).bits() & ~f; rest && flat; rest &= rest - 1)
      flat = rk.rank(f | (rest & (~rest + 1u))) > r;
    if (!flat) continue;
    bool cyclic = true;  // no coloops in the restriction to f
    for (std::uint32_t rest = f; rest && cyclic; rest &= rest - 1)
      cyclic = rk.rank(f ^ (rest & (~rest + 1u))) == r;
    if (cyclic) out.push_back({Subset(f, n), r});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first.bits() < b.first.bits();
  });
  return out;
}

}  // namespace hypersplit
