#include "hypersplit/stiefel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hypersplit {

ProductLifting::ProductLifting(int n_, Subset base_) : n(n_), base(base_) {
  if (n < 1 || n > Subset::kMaxGround)
    throw std::invalid_argument("ProductLifting: ground set size out of range");
  if (base.ground() != n)
    throw std::invalid_argument("ProductLifting: base has wrong ground set");
  if (base.empty() || base.is_full())
    throw std::invalid_argument("ProductLifting: base must be a proper nonempty subset");
  lambda.assign(static_cast<std::size_t>(base.size()) * (n - base.size()), Rat(0));
}

namespace {

inline std::size_t lambda_index(const ProductLifting& pl, int i, int j) {
  if (!pl.base.contains(i))
    throw std::invalid_argument("ProductLifting: row index not in the base");
  if (j < 1 || j > pl.n || pl.base.contains(j))
    throw std::invalid_argument("ProductLifting: column index not in the complement");
  const std::uint32_t below_i = pl.base.bits() & ((1u << (i - 1)) - 1u);
  const std::uint32_t comp = pl.base.complement().bits();
  const std::uint32_t below_j = comp & ((1u << (j - 1)) - 1u);
  const int cols = pl.n - pl.base.size();
  return static_cast<std::size_t>(std::popcount(below_i)) * cols + std::popcount(below_j);
}

}  // namespace

Rat& ProductLifting::at(int i, int j) { return lambda[lambda_index(*this, i, j)]; }
const Rat& ProductLifting::at(int i, int j) const { return lambda[lambda_index(*this, i, j)]; }

namespace {

Rat assignment_exhaustive(const std::vector<std::vector<Rat>>& w) {
  const int s = static_cast<int>(w.size());
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  Rat best;
  do {
    Rat total = 0;
    for (int r = 0; r < s; ++r) total += w[r][perm[r]];
    if (first || total < best) {
      best = total;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Potential-based augmenting paths (Kuhn's algorithm) over exact rationals;
// "infinite" entries are tracked with validity flags instead of sentinels.
Rat assignment_hungarian(const std::vector<std::vector<Rat>>& w) {
  const int s = static_cast<int>(w.size());
  std::vector<Rat> u(s + 1, Rat(0)), v(s + 1, Rat(0));
  std::vector<int> match(s + 1, 0), way(s + 1, 0);  // match[j] = row occupying column j
  for (int i = 1; i <= s; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Rat> minv(s + 1, Rat(0));
    std::vector<char> have(s + 1, 0), used(s + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      Rat delta;
      bool have_delta = false;
      for (int j = 1; j <= s; ++j) {
        if (used[j]) continue;
        Rat cur = w[i0 - 1][j - 1] - u[i0] - v[j];
        if (!have[j] || cur < minv[j]) {
          minv[j] = cur;
          have[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (int j = 0; j <= s; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else if (have[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  Rat total = 0;
  for (int j = 1; j <= s; ++j) total += w[match[j] - 1][j - 1];
  return total;
}

}  // namespace

Rat assignment_min(const std::vector<std::vector<Rat>>& weights) {
  const int s = static_cast<int>(weights.size());
  for (const auto& row : weights)
    if (static_cast<int>(row.size()) != s)
      throw std::invalid_argument("assignment_min: table must be square");
  if (s == 0) return 0;
  if (s > 8) throw std::invalid_argument("assignment_min: table larger than the supported bound");
  return s <= 4 ? assignment_exhaustive(weights) : assignment_hungarian(weights);
}

Lifting stiefel_lift(const ProductLifting& pl) {
  const int n = pl.n, d = pl.d();
  Lifting out(n, d);
  for (const Subset& j_set : all_subsets_of_size(n, d)) {
    const std::vector<int> rows = pl.base.minus(j_set).elements();
    const std::vector<int> cols = j_set.minus(pl.base).elements();
    const int t = static_cast<int>(rows.size());
    if (t == 0) continue;  // the base itself: height 0
    std::vector<std::vector<Rat>> w(t, std::vector<Rat>(t));
    for (int r = 0; r < t; ++r)
      for (int c = 0; c < t; ++c) w[r][c] = pl.at(rows[r], cols[c]);
    out.at(j_set) = assignment_min(w);
  }
  return out;
}

ProductLifting induced_product_lifting(const Lifting& p, const Subset& base) {
  if (base.ground() != p.n || base.size() != p.d)
    throw std::invalid_argument("induced_product_lifting: base is not a d-subset of the ground set");
  ProductLifting out(p.n, base);
  const Rat& base_height = p.at(base);
  for (int i : base.elements())
    for (int j : base.complement().elements())
      out.at(i, j) = p.at(base.without(i).with(j)) - base_height;
  return out;
}

bool verify_stiefel_roundtrip(const MultiSplit& ms, const Subset& base) {
  const MultiSplitCells cells = multisplit_cells(ms);
  if (!cells.common.is_basis(base))
    throw std::invalid_argument("verify_stiefel_roundtrip: base vertex is not a basis of the common cell");
  const Lifting p = corank_vector(cells.maximal[0]);
  const Lifting q = stiefel_lift(induced_product_lifting(p, base));
  const Subdivision sub = regular_subdivision(hypersimplex_configuration(ms.d(), ms.n()), q.heights);

  std::vector<std::vector<int>> expect;
  for (const Matroid& cell : cells.maximal) {
    std::vector<int> idx;
    for (const Subset& b : cell.bases()) idx.push_back(static_cast<int>(colex_index(b)));
    std::sort(idx.begin(), idx.end());
    expect.push_back(std::move(idx));
  }
  std::sort(expect.begin(), expect.end());

  std::vector<std::vector<int>> actual;
  for (const SubdivisionCell& cell : sub.cells) actual.push_back(cell.points);
  std::sort(actual.begin(), actual.end());
  return expect == actual;
}

std::optional<ProductLifting> search_01_lifting(const Subdivision& target) {
  const int m = target.config.m;
  int d = 0;
  {
    const auto& p0 = target.config.points[0];
    std::vector<int> ones;
    for (int c = 0; c < m; ++c)
      if (p0[c] == 1) ones.push_back(c);
    if (ones.size() == 2) d = ones[1];
  }
  const int l = m - d;
  if (d < 1 || l < 1 || !(target.config == product_configuration(d, l)))
    throw std::invalid_argument("search_01_lifting: configuration is not a product of simplices");
  if (d * l > 20)
    throw std::invalid_argument("search_01_lifting: product too large for exhaustive search");

  const PointConfiguration pc = product_configuration(d, l);
  const int cells_count = d * l;
  std::vector<Rat> heights(cells_count);
  for (std::uint32_t mask = 0; mask < (1u << cells_count); ++mask) {
    for (int t = 0; t < cells_count; ++t) heights[t] = (mask >> t) & 1u;
    const Subdivision sub = regular_subdivision(pc, heights);
    if (!subdivisions_equal(sub, target)) continue;
    ProductLifting out(d + l, Subset(static_cast<std::uint32_t>((1u << d) - 1u), d + l));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < l; ++b) out.at(a + 1, d + b + 1) = heights[a * l + b];
    return out;
  }
  return std::nullopt;
}

}  // namespace hypersplit
