#include "hypersplit/subdivision.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace hypersplit {

namespace {

// ============================================================================
// Integer kernels.  The hot path runs on overflow-checked 64-bit integers and
// retries on arbitrary precision when a product would wrap.
// ============================================================================

struct Overflow {};

struct I64 {
  long long v = 0;
  I64() = default;
  I64(long long x) : v(x) {}
};
inline I64 operator+(I64 a, I64 b) {
  long long r;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
  return {r};
}
inline I64 operator-(I64 a, I64 b) {
  long long r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
  return {r};
}
inline I64 operator*(I64 a, I64 b) {
  long long r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
  return {r};
}
inline I64 operator-(I64 a) {
  if (a.v == LLONG_MIN) throw Overflow{};
  return {-a.v};
}
inline bool operator==(I64 a, I64 b) { return a.v == b.v; }
inline bool operator!=(I64 a, I64 b) { return a.v != b.v; }

inline int z_sign(I64 a) { return (a.v > 0) - (a.v < 0); }
inline int z_sign(const mpz_class& a) { return mpz_sgn(a.get_mpz_t()); }
inline I64 z_divexact(I64 a, I64 b) { return {a.v / b.v}; }
inline mpz_class z_divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline I64 z_gcd(I64 a, I64 b) {
  if (a.v == LLONG_MIN || b.v == LLONG_MIN) throw Overflow{};
  return {std::gcd(a.v < 0 ? -a.v : a.v, b.v < 0 ? -b.v : b.v)};
}
inline mpz_class z_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

template <class Z>
Z z_from_mpz(const mpz_class& x);
template <>
I64 z_from_mpz<I64>(const mpz_class& x) {
  if (!x.fits_slong_p()) throw Overflow{};
  return {x.get_si()};
}
template <>
mpz_class z_from_mpz<mpz_class>(const mpz_class& x) {
  return x;
}

inline mpz_class z_to_mpz(I64 a) { return mpz_class(static_cast<long>(a.v)); }
inline mpz_class z_to_mpz(const mpz_class& a) { return a; }

// ============================================================================
// Affine-hull reduction: pick pivot columns so the configuration projects
// injectively (on its affine hull) onto full-dimensional coordinates.
// ============================================================================

struct Reduced {
  int A = 0;                          // affine-hull dimension
  std::vector<int> pivot_cols;        // ambient columns kept by the projection
  std::vector<int> spanning;          // A+1 affinely independent point indices
  std::vector<std::vector<Rat>> y;    // N x A projected coordinates
};

Reduced affine_reduce(const PointConfiguration& pc) {
  const int N = pc.size(), m = pc.m;
  Reduced red;
  std::vector<std::vector<Rat>> ech;
  std::vector<int> piv;
  red.spanning.push_back(0);
  for (int i = 1; i < N; ++i) {
    std::vector<Rat> row(m);
    for (int c = 0; c < m; ++c) row[c] = pc.points[i][c] - pc.points[0][c];
    for (std::size_t r = 0; r < ech.size(); ++r) {
      if (row[piv[r]] != 0) {
        Rat f = row[piv[r]] / ech[r][piv[r]];
        for (int c = 0; c < m; ++c) row[c] -= f * ech[r][c];
      }
    }
    int p = -1;
    for (int c = 0; c < m; ++c)
      if (row[c] != 0) { p = c; break; }
    if (p >= 0) {
      ech.push_back(std::move(row));
      piv.push_back(p);
      red.spanning.push_back(i);
    }
  }
  red.A = static_cast<int>(ech.size());
  red.pivot_cols = std::move(piv);
  red.y.assign(N, std::vector<Rat>(red.A));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < red.A; ++j) red.y[i][j] = pc.points[i][red.pivot_cols[j]];
  return red;
}

// Unique affine function through A+1 affinely independent reduced points and
// their heights; empty result if the (never expected) system is singular.
std::vector<Rat> solve_affine_through(const Reduced& red, const std::vector<Rat>& heights) {
  const int s = red.A + 1;
  std::vector<std::vector<Rat>> aug(s, std::vector<Rat>(s + 1));
  for (int r = 0; r < s; ++r) {
    const int i = red.spanning[r];
    for (int j = 0; j < red.A; ++j) aug[r][j] = red.y[i][j];
    aug[r][red.A] = 1;
    aug[r][s] = heights[i];
  }
  for (int k = 0; k < s; ++k) {
    int pr = -1;
    for (int r = k; r < s; ++r)
      if (aug[r][k] != 0) { pr = r; break; }
    if (pr < 0) return {};
    std::swap(aug[k], aug[pr]);
    for (int r = 0; r < s; ++r) {
      if (r == k || aug[r][k] == 0) continue;
      Rat f = aug[r][k] / aug[k][k];
      for (int c = k; c <= s; ++c) aug[r][c] -= f * aug[k][c];
    }
  }
  std::vector<Rat> sol(s);
  for (int r = 0; r < s; ++r) sol[r] = aug[r][s] / aug[r][r];
  return sol;
}

// ============================================================================
// Lower-hull engine.  Heights carry a lexicographic symbolic perturbation
// (point i gets an infinitesimal eps_i, eps_0 >> eps_1 >> ...), which makes
// the perturbed lower hull simplicial with unique ridge pivots.  True cells
// are recovered by grouping perturbed cells on their unperturbed tight sets.
// ============================================================================

constexpr int kMaxEnginePoints = 128;
constexpr int kMaxCellSize = 17;  // A+1 <= 17 given ambient caps

using CellKey = std::array<std::uint8_t, kMaxCellSize + 1>;
struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : k) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

using TightMask = std::array<std::uint64_t, 2>;

template <class Z>
struct GroupWitness {
  std::vector<Z> w;  // A+1 entries: coefficients and offset, scaled by delta
  Z delta;           // positive
};

template <class Z>
struct Engine {
  int N = 0, A = 0;
  std::vector<std::vector<Z>> Y;  // N x A integer coordinates
  std::vector<Z> H;               // N integer heights

  // Scratch for the per-cell solve.
  std::vector<std::vector<Z>> grid;

  std::map<TightMask, GroupWitness<Z>> groups;

  // ---- exact linear algebra -------------------------------------------------

  // Fraction-free Gauss-Jordan (Montante) on [M | H-column | I], M the
  // (A+1)x(A+1) matrix of rows [Y_c | 1] over the cell's points.  On return
  // delta > 0 and sol[c] are the solution numerators: M x = rhs has
  // x = sol_col / delta for each right-hand side.
  void solve_cell(const std::vector<int>& cell, Z& delta,
                  std::vector<std::vector<Z>>& sol) {
    const int s = A + 1, width = 2 * s + 1;
    grid.assign(s, std::vector<Z>(width, Z(0)));
    for (int r = 0; r < s; ++r) {
      const int p = cell[r];
      for (int j = 0; j < A; ++j) grid[r][j] = Y[p][j];
      grid[r][A] = Z(1);
      grid[r][s] = H[p];
      grid[r][s + 1 + r] = Z(1);
    }
    Z prev(1);
    for (int k = 0; k < s; ++k) {
      if (z_sign(grid[k][k]) == 0) {
        int pr = -1;
        for (int r = k + 1; r < s; ++r)
          if (z_sign(grid[r][k]) != 0) { pr = r; break; }
        if (pr < 0) throw std::logic_error("regular_subdivision: degenerate cell solve");
        std::swap(grid[k], grid[pr]);
      }
      const Z p = grid[k][k];
      for (int i = 0; i < s; ++i) {
        if (i == k) continue;
        const Z f = grid[i][k];
        for (int j = 0; j < width; ++j) {
          if (j == k) continue;
          grid[i][j] = z_divexact(p * grid[i][j] - f * grid[k][j], prev);
        }
        grid[i][k] = Z(0);
      }
      prev = p;
    }
    delta = grid[s - 1][s - 1];
    const int flip = z_sign(delta) < 0 ? -1 : 1;
    if (flip < 0) delta = -delta;
    sol.assign(s + 1, std::vector<Z>(s));
    for (int c = 0; c <= s; ++c)
      for (int r = 0; r < s; ++r)
        sol[c][r] = flip < 0 ? -grid[r][s + c] : grid[r][s + c];
  }

  Z dot_point(const std::vector<Z>& w, int j) const {
    Z acc = w[A];
    for (int t = 0; t < A; ++t) acc = acc + w[t] * Y[j][t];
    return acc;
  }

  // ---- initial cell: raise a support function from the lexicographic
  // minimum of the perturbed heights ------------------------------------------

  struct PVal {
    Z real{};
    std::vector<std::pair<int, Z>> eps;  // ascending point index, nonzero
  };

  static void pval_combine(PVal& a, const Z& ca, const PVal& b, const Z& cb) {
    // a := ca*a - cb*b
    a.real = ca * a.real - cb * b.real;
    std::vector<std::pair<int, Z>> merged;
    merged.reserve(a.eps.size() + b.eps.size());
    std::size_t i = 0, j = 0;
    while (i < a.eps.size() || j < b.eps.size()) {
      int ia = i < a.eps.size() ? a.eps[i].first : INT_MAX;
      int ib = j < b.eps.size() ? b.eps[j].first : INT_MAX;
      if (ia < ib) {
        Z v = ca * a.eps[i].second;
        if (z_sign(v) != 0) merged.push_back({ia, std::move(v)});
        ++i;
      } else if (ib < ia) {
        Z v = -(cb * b.eps[j].second);
        if (z_sign(v) != 0) merged.push_back({ib, std::move(v)});
        ++j;
      } else {
        Z v = ca * a.eps[i].second - cb * b.eps[j].second;
        if (z_sign(v) != 0) merged.push_back({ia, std::move(v)});
        ++i;
        ++j;
      }
    }
    a.eps = std::move(merged);
  }

  // sign of (a/ta) - (b/tb) for ta, tb > 0, lexicographic in the perturbation
  static int pval_ratio_cmp(const PVal& a, const Z& ta, const PVal& b, const Z& tb) {
    int s = z_sign(a.real * tb - b.real * ta);
    if (s != 0) return s;
    std::size_t i = 0, j = 0;
    while (i < a.eps.size() || j < b.eps.size()) {
      int ia = i < a.eps.size() ? a.eps[i].first : INT_MAX;
      int ib = j < b.eps.size() ? b.eps[j].first : INT_MAX;
      if (ia < ib) {
        s = z_sign(a.eps[i].second * tb);
        if (s != 0) return s;
        ++i;
      } else if (ib < ia) {
        s = -z_sign(b.eps[j].second * ta);
        if (s != 0) return s;
        ++j;
      } else {
        s = z_sign(a.eps[i].second * tb - b.eps[j].second * ta);
        if (s != 0) return s;
        ++i;
        ++j;
      }
    }
    return 0;
  }

  std::vector<int> initial_cell() {
    // Lexicographic minimum of H_i + eps_i: smallest height, then the largest
    // index (later points carry smaller perturbations).
    int m0 = 0;
    for (int i = 1; i < N; ++i) {
      int c = z_sign(H[i] - H[m0]);
      if (c < 0 || (c == 0 && i > m0)) m0 = i;
    }

    std::vector<int> tight{m0};
    std::vector<char> in_tight(N, 0);
    in_tight[m0] = 1;
    std::vector<PVal> sig(N);
    for (int j = 0; j < N; ++j) {
      if (j == m0) continue;
      sig[j].real = H[j] - H[m0];
      if (j < m0)
        sig[j].eps = {{j, Z(1)}, {m0, Z(-1)}};
      else
        sig[j].eps = {{m0, Z(-1)}, {j, Z(1)}};
    }

    std::vector<Z> tau(N, Z(0));
    while (static_cast<int>(tight.size()) < A + 1) {
      // Integer echelon of the difference rows of the tight set.
      std::vector<std::vector<Z>> ech;
      std::vector<int> piv;
      for (std::size_t r = 1; r < tight.size(); ++r) {
        std::vector<Z> row(A);
        for (int c = 0; c < A; ++c) row[c] = Y[tight[r]][c] - Y[tight[0]][c];
        for (std::size_t e = 0; e < ech.size(); ++e) {
          if (z_sign(row[piv[e]]) == 0) continue;
          const Z pe = ech[e][piv[e]], fe = row[piv[e]];
          for (int c = 0; c < A; ++c) row[c] = pe * row[c] - fe * ech[e][c];
        }
        Z content(0);
        int p = -1;
        for (int c = 0; c < A; ++c) {
          if (z_sign(row[c]) != 0) {
            if (p < 0) p = c;
            content = z_gcd(content, row[c]);
          }
        }
        if (p < 0) continue;
        if (!(content == Z(1)))
          for (int c = 0; c < A; ++c)
            if (z_sign(row[c]) != 0) row[c] = z_divexact(row[c], content);
        ech.push_back(std::move(row));
        piv.push_back(p);
      }

      // Kernel direction with a nonzero value somewhere off the tight span.
      bool found_dir = false;
      for (int f = 0; f < A && !found_dir; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        std::vector<Z> u(A, Z(0));
        u[f] = Z(1);
        for (int e = static_cast<int>(ech.size()) - 1; e >= 0; --e) {
          Z val(0);
          for (int c = 0; c < A; ++c)
            if (c != piv[e]) val = val + ech[e][c] * u[c];
          const Z lead = ech[e][piv[e]];
          for (int c = 0; c < A; ++c)
            if (c != piv[e]) u[c] = u[c] * lead;
          u[piv[e]] = -val;
        }
        bool nonzero = false, positive = false;
        for (int j = 0; j < N; ++j) {
          if (in_tight[j]) { tau[j] = Z(0); continue; }
          Z t(0);
          for (int c = 0; c < A; ++c) t = t + u[c] * (Y[j][c] - Y[tight[0]][c]);
          if (z_sign(t) != 0) nonzero = true;
          if (z_sign(t) > 0) positive = true;
          tau[j] = std::move(t);
        }
        if (!nonzero) continue;
        if (!positive)
          for (int j = 0; j < N; ++j) tau[j] = -tau[j];
        found_dir = true;
      }
      if (!found_dir)
        throw std::logic_error("regular_subdivision: no raising direction found");

      int best = -1;
      for (int j = 0; j < N; ++j) {
        if (in_tight[j] || z_sign(tau[j]) <= 0) continue;
        if (best < 0 || pval_ratio_cmp(sig[j], tau[j], sig[best], tau[best]) < 0) best = j;
      }
      if (best < 0)
        throw std::logic_error("regular_subdivision: raising loop found no entering point");

      const PVal entering = sig[best];
      const Z tbest = tau[best];
      for (int j = 0; j < N; ++j) {
        if (in_tight[j] || j == best) continue;
        pval_combine(sig[j], tbest, entering, tau[j]);
      }
      in_tight[best] = 1;
      tight.push_back(best);
      sig[best] = PVal{};

      // Shared positive scale: strip the global content to keep entries small.
      Z content(0);
      for (int j = 0; j < N; ++j) {
        if (in_tight[j]) continue;
        content = z_gcd(content, sig[j].real);
        for (auto& [idx, v] : sig[j].eps) content = z_gcd(content, v);
      }
      if (z_sign(content) != 0 && !(content == Z(1))) {
        for (int j = 0; j < N; ++j) {
          if (in_tight[j]) continue;
          if (z_sign(sig[j].real) != 0) sig[j].real = z_divexact(sig[j].real, content);
          for (auto& [idx, v] : sig[j].eps) v = z_divexact(v, content);
        }
      }
    }
    std::sort(tight.begin(), tight.end());
    return tight;
  }

  // ---- breadth-first search over the perturbed simplicial cells -------------

  void run() {
    std::vector<int> start = initial_cell();
    std::unordered_set<CellKey, CellKeyHash> visited;
    std::deque<std::vector<int>> queue;
    auto key_of = [](const std::vector<int>& cell) {
      CellKey k;
      k.fill(255);
      for (std::size_t i = 0; i < cell.size(); ++i) k[i] = static_cast<std::uint8_t>(cell[i]);
      return k;
    };
    visited.insert(key_of(start));
    queue.push_back(std::move(start));

    Z delta;
    std::vector<std::vector<Z>> sol;       // columns: [H-solution | adjugate columns]
    std::vector<Z>& sigma_real = sigma_real_scratch;
    std::vector<std::vector<Z>> eps_dot;   // eps_dot[r][j] = [Y_j|1] . adj-col-r
    std::vector<int> pos_in_cell(N);

    while (!queue.empty()) {
      std::vector<int> cell = std::move(queue.front());
      queue.pop_front();
      const int s = A + 1;
      solve_cell(cell, delta, sol);
      const std::vector<Z>& wreal = sol[0];

      std::fill(pos_in_cell.begin(), pos_in_cell.end(), -1);
      for (int r = 0; r < s; ++r) pos_in_cell[cell[r]] = r;

      eps_dot.assign(s, std::vector<Z>(N, Z(0)));
      for (int r = 0; r < s; ++r)
        for (int j = 0; j < N; ++j) {
          if (pos_in_cell[j] >= 0) continue;
          eps_dot[r][j] = dot_point(sol[1 + r], j);
        }

      TightMask mask{0, 0};
      for (int r = 0; r < s; ++r) mask[cell[r] >> 6] |= 1ull << (cell[r] & 63);
      for (int j = 0; j < N; ++j) {
        if (pos_in_cell[j] >= 0) { sigma_real[j] = Z(0); continue; }
        sigma_real[j] = delta * H[j] - dot_point(wreal, j);
        const int sg = z_sign(sigma_real[j]);
        if (sg < 0)
          throw std::logic_error("regular_subdivision: point below the supporting hyperplane");
        if (sg == 0) mask[j >> 6] |= 1ull << (j & 63);
      }
      record_group(mask, wreal, delta);

      // Ridges: dropping cell[r] flips across the hyperplane spanned by the
      // rest; the adjugate column r is exactly its integer normal form, with
      // tau_j = -eps_dot[r][j] positive on the outward side.
      for (int r = 0; r < s; ++r) {
        int best = -1;
        for (int j = 0; j < N; ++j) {
          if (pos_in_cell[j] >= 0 || z_sign(eps_dot[r][j]) >= 0) continue;
          if (best < 0) { best = j; continue; }
          if (perturbed_ratio_less(cell, delta, eps_dot, r, j, best)) best = j;
        }
        if (best < 0) continue;  // boundary ridge of the configuration
        std::vector<int> next;
        next.reserve(s);
        for (int t = 0; t < s; ++t)
          if (t != r) next.push_back(cell[t]);
        next.push_back(best);
        std::sort(next.begin(), next.end());
        CellKey k = key_of(next);
        if (visited.insert(k).second) queue.push_back(std::move(next));
      }
    }
  }

  // Is sigma_hat[a]/tau_a < sigma_hat[b]/tau_b for the ridge dropping cell[r]?
  // tau_j = -eps_dot[r][j] (> 0 for both candidates); the perturbed slack of a
  // candidate j has real part sigma_real[j], coefficient -eps_dot[t][j] on the
  // perturbation of cell[t], and +delta on its own.
  bool perturbed_ratio_less(const std::vector<int>& cell, const Z& delta,
                            const std::vector<std::vector<Z>>& eps_dot, int r, int a,
                            int b) const {
    const Z ta = -eps_dot[r][a], tb = -eps_dot[r][b];
    int s = z_sign(sigma_real_at(a) * tb - sigma_real_at(b) * ta);
    if (s != 0) return s < 0;
    // Walk the perturbation indices in dominance order (ascending point index).
    const int cs = static_cast<int>(cell.size());
    int ci = 0;
    std::array<int, 2> singles{std::min(a, b), std::max(a, b)};
    int si = 0;
    while (ci < cs || si < 2) {
      int idx;
      if (ci < cs && (si >= 2 || cell[ci] < singles[si]))
        idx = cell[ci++];
      else
        idx = singles[si++];
      Z ca = idx == a ? delta : Z(0);
      Z cb = idx == b ? delta : Z(0);
      if (ci > 0 && ci <= cs && cell[ci - 1] == idx) {
        ca = ca - eps_dot[ci - 1][a];
        cb = cb - eps_dot[ci - 1][b];
      }
      s = z_sign(ca * tb - cb * ta);
      if (s != 0) return s < 0;
    }
    throw std::logic_error("regular_subdivision: perturbation failed to break a tie");
  }

  const Z& sigma_real_at(int j) const { return sigma_real_scratch[j]; }
  std::vector<Z> sigma_real_scratch;

  void record_group(const TightMask& mask, const std::vector<Z>& wreal, const Z& delta) {
    GroupWitness<Z> cand{wreal, delta};
    Z g = delta;
    for (const Z& v : cand.w) g = z_gcd(g, v);
    if (!(g == Z(1))) {
      cand.delta = z_divexact(cand.delta, g);
      for (Z& v : cand.w) v = z_divexact(v, g);
    }
    auto it = groups.find(mask);
    if (it == groups.end()) {
      groups.emplace(mask, std::move(cand));
    } else {
      const GroupWitness<Z>& have = it->second;
      bool same = have.delta == cand.delta && have.w.size() == cand.w.size();
      for (std::size_t i = 0; same && i < have.w.size(); ++i) same = have.w[i] == cand.w[i];
      if (!same)
        throw std::logic_error("regular_subdivision: inconsistent witnesses within one cell");
    }
  }
};

}  // namespace

// ============================================================================
// Public types and services
// ============================================================================

PointConfiguration::PointConfiguration(int m_, std::vector<std::vector<Rat>> pts)
    : m(m_), points(std::move(pts)) {
  if (m < 0) throw std::invalid_argument("PointConfiguration: negative dimension");
  if (points.empty()) throw std::invalid_argument("PointConfiguration: no points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != m)
      throw std::invalid_argument("PointConfiguration: point of wrong dimension");
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("PointConfiguration: points must be pairwise distinct");
}

PointConfiguration hypersimplex_configuration(int d, int n) {
  std::vector<std::vector<Rat>> pts;
  for (const Subset& s : all_subsets_of_size(n, d)) {
    std::vector<Rat> p(n, Rat(0));
    for (int e : s.elements()) p[e - 1] = 1;
    pts.push_back(std::move(p));
  }
  return PointConfiguration(n, std::move(pts));
}

PointConfiguration product_configuration(int d, int l) {
  if (d < 1 || l < 1) throw std::invalid_argument("product_configuration: need d, l >= 1");
  std::vector<std::vector<Rat>> pts;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < l; ++b) {
      std::vector<Rat> p(d + l, Rat(0));
      p[a] = 1;
      p[d + b] = 1;
      pts.push_back(std::move(p));
    }
  return PointConfiguration(d + l, std::move(pts));
}

namespace {

template <class Z>
std::map<TightMask, GroupWitness<Z>> run_engine(const Reduced& red,
                                                const std::vector<mpz_class>& yz,
                                                const std::vector<mpz_class>& hz, int N) {
  Engine<Z> eng;
  eng.N = N;
  eng.A = red.A;
  eng.Y.assign(N, std::vector<Z>(red.A));
  eng.H.resize(N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < red.A; ++j) eng.Y[i][j] = z_from_mpz<Z>(yz[i * red.A + j]);
    eng.H[i] = z_from_mpz<Z>(hz[i]);
  }
  eng.sigma_real_scratch.assign(N, Z(0));
  eng.run();
  return std::move(eng.groups);
}

}  // namespace

Subdivision regular_subdivision(const PointConfiguration& pc, const std::vector<Rat>& heights) {
  const int N = pc.size();
  if (static_cast<int>(heights.size()) != N)
    throw std::invalid_argument("regular_subdivision: height count mismatch");
  if (N > kMaxEnginePoints)
    throw std::invalid_argument("regular_subdivision: configuration too large");

  Subdivision out;
  out.config = pc;
  out.heights = heights;

  if (N == 1) {
    SubdivisionCell cell;
    cell.points = {0};
    cell.witness.assign(pc.m + 1, Rat(0));
    cell.witness[pc.m] = heights[0];
    out.cells.push_back(std::move(cell));
    return out;
  }

  Reduced red = affine_reduce(pc);
  if (red.A + 1 > kMaxCellSize)
    throw std::invalid_argument("regular_subdivision: affine dimension too large");

  auto ambient_witness = [&](const std::vector<Rat>& reduced_w) {
    std::vector<Rat> w(pc.m + 1, Rat(0));
    for (int j = 0; j < red.A; ++j) w[red.pivot_cols[j]] = reduced_w[j];
    w[pc.m] = reduced_w[red.A];
    return w;
  };

  // Fast path: heights that are globally affine give the trivial subdivision.
  {
    std::vector<Rat> g = solve_affine_through(red, heights);
    if (!g.empty()) {
      bool all_tight = true;
      for (int i = 0; i < N && all_tight; ++i) {
        Rat val = g[red.A];
        for (int j = 0; j < red.A; ++j) val += g[j] * red.y[i][j];
        all_tight = val == heights[i];
      }
      if (all_tight) {
        SubdivisionCell cell;
        cell.points.resize(N);
        std::iota(cell.points.begin(), cell.points.end(), 0);
        cell.witness = ambient_witness(g);
        out.cells.push_back(std::move(cell));
        return out;
      }
    }
  }

  // Integerize: one positive scale per reduced axis, one for the heights.
  std::vector<mpz_class> axis_scale(red.A, 1);
  for (int j = 0; j < red.A; ++j)
    for (int i = 0; i < N; ++i)
      mpz_lcm(axis_scale[j].get_mpz_t(), axis_scale[j].get_mpz_t(),
              red.y[i][j].get_den_mpz_t());
  mpz_class height_scale = 1;
  for (int i = 0; i < N; ++i)
    mpz_lcm(height_scale.get_mpz_t(), height_scale.get_mpz_t(), heights[i].get_den_mpz_t());

  std::vector<mpz_class> yz(static_cast<std::size_t>(N) * red.A);
  std::vector<mpz_class> hz(N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < red.A; ++j) {
      Rat v = red.y[i][j] * Rat(axis_scale[j]);
      yz[static_cast<std::size_t>(i) * red.A + j] = v.get_num();
    }
    Rat v = heights[i] * Rat(height_scale);
    hz[i] = v.get_num();
  }

  std::map<TightMask, GroupWitness<mpz_class>> groups;
  try {
    auto g64 = run_engine<I64>(red, yz, hz, N);
    for (auto& [mask, wit] : g64) {
      GroupWitness<mpz_class> gw;
      gw.delta = z_to_mpz(wit.delta);
      for (I64 v : wit.w) gw.w.push_back(z_to_mpz(v));
      groups.emplace(mask, std::move(gw));
    }
  } catch (const Overflow&) {
    groups = run_engine<mpz_class>(red, yz, hz, N);
  }

  // Assemble cells; translate witnesses back to ambient rational coordinates.
  for (const auto& [mask, wit] : groups) {
    SubdivisionCell cell;
    for (int i = 0; i < N; ++i)
      if (mask[i >> 6] & (1ull << (i & 63))) cell.points.push_back(i);
    std::vector<Rat> reduced_w(red.A + 1);
    const Rat denom = Rat(wit.delta) * Rat(height_scale);
    for (int j = 0; j < red.A; ++j)
      reduced_w[j] = Rat(wit.w[j]) * Rat(axis_scale[j]) / denom;
    reduced_w[red.A] = Rat(wit.w[red.A]) / denom;
    cell.witness = ambient_witness(reduced_w);
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.points < b.points; });

  // Post-hoc certificate check: each witness is tight on its cell and strictly
  // below every other height.
  for (const SubdivisionCell& cell : out.cells) {
    std::vector<char> inside(N, 0);
    for (int i : cell.points) inside[i] = 1;
    for (int i = 0; i < N; ++i) {
      Rat val = cell.witness[pc.m];
      for (int c = 0; c < pc.m; ++c)
        if (cell.witness[c] != 0) val += cell.witness[c] * pc.points[i][c];
      if (inside[i] ? val != heights[i] : val >= heights[i])
        throw std::logic_error("regular_subdivision: witness certificate failed");
    }
  }
  return out;
}

Subdivision subdivision_from_cells(const PointConfiguration& pc, const std::vector<Rat>& heights,
                                   const std::vector<std::vector<int>>& cells) {
  if (static_cast<int>(heights.size()) != pc.size())
    throw std::invalid_argument("subdivision_from_cells: height count mismatch");
  if (cells.empty()) throw std::invalid_argument("subdivision_from_cells: no cells");
  Subdivision out;
  out.config = pc;
  out.heights = heights;
  for (const auto& c : cells) {
    if (c.empty()) throw std::invalid_argument("subdivision_from_cells: empty cell");
    SubdivisionCell cell;
    cell.points = c;
    std::sort(cell.points.begin(), cell.points.end());
    cell.points.erase(std::unique(cell.points.begin(), cell.points.end()), cell.points.end());
    if (cell.points.size() != c.size())
      throw std::invalid_argument("subdivision_from_cells: duplicate point in cell");
    if (cell.points.front() < 0 || cell.points.back() >= pc.size())
      throw std::invalid_argument("subdivision_from_cells: point index out of range");
    out.cells.push_back(std::move(cell));
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) { return a.points < b.points; });
  for (std::size_t i = 1; i < out.cells.size(); ++i)
    if (out.cells[i].points == out.cells[i - 1].points)
      throw std::invalid_argument("subdivision_from_cells: duplicate cell");
  return out;
}

bool subdivisions_equal(const Subdivision& a, const Subdivision& b) {
  if (!(a.config == b.config))
    throw std::invalid_argument("subdivisions_equal: configuration mismatch");
  auto cells_of = [](const Subdivision& s) {
    std::vector<std::vector<int>> out;
    for (const SubdivisionCell& c : s.cells) out.push_back(c.points);
    std::sort(out.begin(), out.end());
    return out;
  };
  return cells_of(a) == cells_of(b);
}

namespace {

const PointConfiguration& cached_hypersimplex(int d, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PointConfiguration> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({d, n});
  if (it == cache.end())
    it = cache.emplace(std::pair<int, int>{d, n}, hypersimplex_configuration(d, n)).first;
  return it->second;
}

// Recognize a hypersimplex vertex configuration and recover (d, n).
std::pair<int, int> hypersimplex_params(const PointConfiguration& pc) {
  const int n = pc.m;
  if (n < 1 || n > Subset::kMaxGround)
    throw std::invalid_argument("expected a hypersimplex vertex configuration");
  int d = 0;
  for (const Rat& c : pc.points[0]) {
    if (c == 1)
      ++d;
    else if (c != 0)
      throw std::invalid_argument("expected a hypersimplex vertex configuration");
  }
  if (!(pc == cached_hypersimplex(d, n)))
    throw std::invalid_argument("expected a hypersimplex vertex configuration");
  return {d, n};
}

}  // namespace

Subdivision corank_subdivision(const Matroid& m) {
  const Lifting lift = corank_vector(m);
  return regular_subdivision(cached_hypersimplex(m.rank(), m.ground_size()), lift.heights);
}

std::vector<Subset> cell_subsets(const Subdivision& s, const std::vector<int>& cell) {
  auto [d, n] = hypersimplex_params(s.config);
  const std::vector<Subset> all = all_subsets_of_size(n, d);
  std::vector<Subset> out;
  for (int idx : cell) out.push_back(all.at(idx));
  return out;
}

bool is_matroid_subdivision(const Subdivision& s) {
  auto [d, n] = hypersimplex_params(s.config);
  const std::vector<Subset> all = all_subsets_of_size(n, d);
  for (const SubdivisionCell& cell : s.cells) {
    std::vector<Subset> fam;
    for (int idx : cell.points) fam.push_back(all.at(idx));
    if (!is_matroid(n, d, fam)) return false;
  }
  return true;
}

bool is_tropical_plucker(const Lifting& p) {
  const int n = p.n, d = p.d;
  if (d <= 1 || d >= n - 1) return true;
  const auto at = [&](std::uint32_t bits) -> const Rat& {
    return p.heights[colex_index(Subset(bits, n))];
  };
  for (const Subset& s : all_subsets_of_size(n, d - 2)) {
    std::vector<int> rest = s.complement().elements();
    const int r = static_cast<int>(rest.size());
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        for (int c = b + 1; c < r; ++c)
          for (int e = c + 1; e < r; ++e) {
            const std::uint32_t bi = 1u << (rest[a] - 1), bj = 1u << (rest[b] - 1),
                                bk = 1u << (rest[c] - 1), bl = 1u << (rest[e] - 1);
            const Rat t1 = at(s.bits() | bi | bj) + at(s.bits() | bk | bl);
            const Rat t2 = at(s.bits() | bi | bk) + at(s.bits() | bj | bl);
            const Rat t3 = at(s.bits() | bi | bl) + at(s.bits() | bj | bk);
            const Rat& mn = std::min({t1, t2, t3});
            int hits = (t1 == mn ? 1 : 0) + (t2 == mn ? 1 : 0) + (t3 == mn ? 1 : 0);
            if (hits < 2) return false;
          }
  }
  return true;
}

LinearityResult secondary_linearity_dimension(const PointConfiguration& pc, const Subdivision& s) {
  if (!(pc == s.config))
    throw std::invalid_argument("secondary_linearity_dimension: configuration mismatch");
  const int N = pc.size();
  std::vector<char> covered(N, 0);
  for (const SubdivisionCell& c : s.cells)
    for (int i : c.points) covered[i] = 1;
  for (int i = 0; i < N; ++i)
    if (!covered[i])
      throw std::invalid_argument(
          "secondary_linearity_dimension: a point lies in no cell of the subdivision");

  const Reduced red = affine_reduce(pc);
  const int A = red.A;
  const int k = static_cast<int>(s.cells.size());
  const int unknowns = N + k * (A + 1);

  // Stack the agreement constraints  a_C . y_i + b_C - w_i = 0  and compute
  // the null-space dimension of the whole system.
  std::vector<std::vector<Rat>> ech;
  std::vector<int> piv;
  auto add_row = [&](std::vector<Rat> row) {
    for (std::size_t r = 0; r < ech.size(); ++r) {
      if (row[piv[r]] != 0) {
        Rat f = row[piv[r]] / ech[r][piv[r]];
        for (int c = 0; c < unknowns; ++c) row[c] -= f * ech[r][c];
      }
    }
    int p = -1;
    for (int c = 0; c < unknowns; ++c)
      if (row[c] != 0) { p = c; break; }
    if (p >= 0) {
      ech.push_back(std::move(row));
      piv.push_back(p);
    }
  };
  for (int ci = 0; ci < k; ++ci)
    for (int i : s.cells[ci].points) {
      std::vector<Rat> row(unknowns, Rat(0));
      row[i] = -1;
      for (int j = 0; j < A; ++j) row[N + ci * (A + 1) + j] = red.y[i][j];
      row[N + ci * (A + 1) + A] = 1;
      add_row(std::move(row));
    }
  const int rank = static_cast<int>(ech.size());
  const int nullity = unknowns - rank;

  // Subtract the slack of per-cell affine functions vanishing on their cell:
  // cells that span the affine hull contribute nothing.
  int correction = 0;
  for (int ci = 0; ci < k; ++ci) {
    std::vector<std::vector<Rat>> cech;
    std::vector<int> cpiv;
    const auto& pts = s.cells[ci].points;
    for (std::size_t t = 1; t < pts.size(); ++t) {
      std::vector<Rat> row(A);
      for (int j = 0; j < A; ++j) row[j] = red.y[pts[t]][j] - red.y[pts[0]][j];
      for (std::size_t r = 0; r < cech.size(); ++r) {
        if (row[cpiv[r]] != 0) {
          Rat f = row[cpiv[r]] / cech[r][cpiv[r]];
          for (int c = 0; c < A; ++c) row[c] -= f * cech[r][c];
        }
      }
      int p = -1;
      for (int c = 0; c < A; ++c)
        if (row[c] != 0) { p = c; break; }
      if (p >= 0) {
        cech.push_back(std::move(row));
        cpiv.push_back(p);
      }
    }
    correction += (A + 1) - (static_cast<int>(cech.size()) + 1);
  }

  LinearityResult out;
  out.dimension = nullity - correction;
  out.is_coarsest = out.dimension == A + 2;
  return out;
}

bool verify_corank_covering(const Matroid& m) {
  const Subdivision s = corank_subdivision(m);
  const int N = s.config.size();
  std::vector<char> basis_point(N, 0);
  for (const Subset& b : m.bases())
    basis_point[colex_index(b)] = 1;
  std::vector<char> covered(N, 0);
  for (const SubdivisionCell& cell : s.cells) {
    bool meets = false;
    for (int i : cell.points)
      if (basis_point[i]) { meets = true; break; }
    if (!meets) continue;
    for (int i : cell.points) covered[i] = 1;
  }
  for (int i = 0; i < N; ++i)
    if (!covered[i]) return false;
  return true;
}

std::vector<int> convex_hull_2d(const PointConfiguration& pc, const std::vector<int>& cell) {
  if (pc.m != 2) throw std::invalid_argument("convex_hull_2d: configuration must be planar");
  std::vector<int> idx = cell;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pc.points[a] < pc.points[b]; });
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.size() <= 2) return idx;
  auto cross = [&](int o, int a, int b) {
    const auto &po = pc.points[o], &pa = pc.points[a], &pb = pc.points[b];
    Rat v = (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (int i : idx) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], i) <= 0)
        hull.pop_back();
      hull.push_back(i);
    }
    hull.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  return hull;
}

}  // namespace hypersplit
