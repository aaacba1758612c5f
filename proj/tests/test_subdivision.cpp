#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "corpora.hpp"
#include "doctest.h"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/subdivision.hpp"

using namespace hypersplit;

namespace {

std::vector<Rat> H(const std::vector<long>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (long x : v) out.push_back(Rat(x));
  return out;
}

PointConfiguration line3() {
  return PointConfiguration(1, {{Rat(0)}, {Rat(1)}, {Rat(2)}});
}

// Square of side 3 with the off-center interior point (1,1).
PointConfiguration five_points() {
  return PointConfiguration(2, {{Rat(0), Rat(0)},
                                {Rat(3), Rat(0)},
                                {Rat(0), Rat(3)},
                                {Rat(3), Rat(3)},
                                {Rat(1), Rat(1)}});
}

std::vector<std::vector<int>> cell_lists(const Subdivision& s) {
  std::vector<std::vector<int>> out;
  for (const SubdivisionCell& c : s.cells) out.push_back(c.points);
  std::sort(out.begin(), out.end());
  return out;
}

void check_cells(const Subdivision& s, std::vector<std::vector<int>> expect) {
  for (auto& c : expect) std::sort(c.begin(), c.end());
  std::sort(expect.begin(), expect.end());
  CHECK(cell_lists(s) == expect);
}

// Re-derive the defining property of every witness directly from the heights,
// and check that averaged witnesses cut out exactly the pairwise
// intersections.
void check_witnesses(const Subdivision& s) {
  const int m = s.config.m;
  const int N = s.config.size();
  auto value = [&](const std::vector<Rat>& w, int j) {
    Rat v = w[m];
    for (int i = 0; i < m; ++i) v += w[i] * s.config.points[j][i];
    return v;
  };
  for (const SubdivisionCell& c : s.cells) {
    REQUIRE(c.witness.size() == static_cast<size_t>(m) + 1);
    std::vector<char> in(N, 0);
    for (int j : c.points) in[j] = 1;
    for (int j = 0; j < N; ++j) {
      Rat v = value(c.witness, j);
      if (in[j])
        CHECK(v == s.heights[j]);
      else
        CHECK(v < s.heights[j]);
    }
  }
  for (size_t a = 0; a < s.cells.size(); ++a)
    for (size_t b = a + 1; b < s.cells.size(); ++b) {
      std::vector<int> expect;
      std::set_intersection(s.cells[a].points.begin(), s.cells[a].points.end(),
                            s.cells[b].points.begin(), s.cells[b].points.end(),
                            std::back_inserter(expect));
      std::vector<int> tight;
      for (int j = 0; j < N; ++j) {
        Rat v = value(s.cells[a].witness, j) + value(s.cells[b].witness, j);
        if (v == Rat(2) * s.heights[j]) tight.push_back(j);
      }
      CHECK(tight == expect);
    }
}

std::set<std::vector<std::uint32_t>> cells_as_basis_sets(const Subdivision& s) {
  std::set<std::vector<std::uint32_t>> out;
  for (const SubdivisionCell& c : s.cells) {
    std::vector<std::uint32_t> fam;
    for (const Subset& b : cell_subsets(s, c.points)) fam.push_back(b.bits());
    out.insert(fam);
  }
  return out;
}

std::set<std::vector<std::uint32_t>> maximal_as_basis_sets(const MultiSplitCells& mc) {
  std::set<std::vector<std::uint32_t>> out;
  for (const Matroid& m : mc.maximal) {
    std::vector<std::uint32_t> fam;
    for (const Subset& b : m.bases()) fam.push_back(b.bits());
    out.insert(fam);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("subdivisions");

TEST_CASE("point configurations") {
  SUBCASE("hypersimplex vertices in colex order") {
    PointConfiguration pc = hypersimplex_configuration(2, 4);
    REQUIRE(pc.m == 4);
    REQUIRE(pc.size() == 6);
    auto subs = all_subsets_of_size(4, 2);
    for (int i = 0; i < 6; ++i)
      for (int coord = 1; coord <= 4; ++coord)
        CHECK(pc.points[i][coord - 1] == (subs[i].contains(coord) ? 1 : 0));
  }
  SUBCASE("product of simplices, first factor major") {
    PointConfiguration pc = product_configuration(2, 3);
    REQUIRE(pc.m == 5);
    REQUIRE(pc.size() == 6);
    CHECK(pc.points[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(pc.points[1] == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1), Rat(0)});
    CHECK(pc.points[2] == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(pc.points[3] == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(0), Rat(0)});
    CHECK(pc.points[5] == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)});
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(PointConfiguration(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfiguration(2, {{Rat(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfiguration(1, {{Rat(0)}, {Rat(0)}}), std::invalid_argument);
  }
}

TEST_CASE("lower hull basics") {
  SUBCASE("single point") {
    Subdivision s = regular_subdivision(PointConfiguration(2, {{Rat(1), Rat(2)}}), H({5}));
    check_cells(s, {{0}});
    check_witnesses(s);
  }
  SUBCASE("flat heights give one cell with everything") {
    for (const PointConfiguration& pc :
         {line3(), five_points(), hypersimplex_configuration(2, 4)}) {
      Subdivision s = regular_subdivision(pc, std::vector<Rat>(pc.size(), Rat(0)));
      REQUIRE(s.cells.size() == 1);
      CHECK(s.cells[0].points.size() == static_cast<size_t>(pc.size()));
      check_witnesses(s);
    }
  }
  SUBCASE("folding a segment") {
    Subdivision s = regular_subdivision(line3(), H({0, -1, 0}));
    check_cells(s, {{0, 1}, {1, 2}});
    check_witnesses(s);
  }
  SUBCASE("a lifted middle point drops out") {
    Subdivision s = regular_subdivision(line3(), H({0, 1, 0}));
    check_cells(s, {{0, 2}});
    check_witnesses(s);
  }
  SUBCASE("lifting one square corner cuts along the opposite diagonal") {
    Subdivision s = regular_subdivision(product_configuration(2, 2), H({1, 0, 0, 0}));
    check_cells(s, {{0, 1, 2}, {1, 2, 3}});
    check_witnesses(s);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(regular_subdivision(line3(), H({0, 0})), std::invalid_argument);
    std::vector<std::vector<Rat>> many;
    for (int i = 0; i < 129; ++i) many.push_back({Rat(i)});
    CHECK_THROWS_AS(regular_subdivision(PointConfiguration(1, many), std::vector<Rat>(129, Rat(0))),
                    std::invalid_argument);
  }
}

TEST_CASE("five-point configuration catalogue") {
  PointConfiguration pc = five_points();
  // Height vectors hand-checked against explicit affine witnesses; together
  // they exhaust the nine regular subdivisions (one trivial, four rays of the
  // two-dimensional secondary fan, four triangulations).
  struct Entry {
    std::vector<long> h;
    std::vector<std::vector<int>> cells;
  };
  const std::vector<Entry> table = {
      {{0, 0, 0, 0, 0}, {{0, 1, 2, 3, 4}}},
      {{0, 0, 0, 0, 1}, {{0, 1, 2, 3}}},            // interior point lifted out
      {{0, 0, 0, 1, 0}, {{0, 1, 2, 4}, {1, 2, 3}}}, // diagonal, interior point riding along
      {{0, 0, 0, 10, 1}, {{0, 1, 2}, {1, 2, 3}}},
      {{0, 1, 1, 0, 0}, {{0, 1, 3, 4}, {0, 2, 3, 4}}},  // other diagonal through the point
      {{0, 1, 1, 0, 1}, {{0, 1, 3}, {0, 2, 3}}},
      {{0, 0, 0, 3, -1}, {{0, 1, 4}, {0, 2, 4}, {1, 2, 3, 4}}},
      {{0, 0, 0, 0, -1}, {{0, 1, 4}, {0, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
      {{0, 0, 0, 6, -1}, {{0, 1, 4}, {0, 2, 4}, {1, 2, 4}, {1, 2, 3}}},
  };
  std::vector<Subdivision> subs;
  for (const Entry& e : table) {
    Subdivision s = regular_subdivision(pc, H(e.h));
    check_cells(s, e.cells);
    check_witnesses(s);
    subs.push_back(std::move(s));
  }
  SUBCASE("pairwise distinct") {
    for (size_t i = 0; i < subs.size(); ++i)
      for (size_t j = 0; j < subs.size(); ++j)
        CHECK(subdivisions_equal(subs[i], subs[j]) == (i == j));
  }
  SUBCASE("the interior point is never a hull vertex where it rides along") {
    for (size_t i : {size_t(2), size_t(4)})
      for (const SubdivisionCell& c : subs[i].cells)
        if (std::count(c.points.begin(), c.points.end(), 4)) {
          auto hull = convex_hull_2d(pc, c.points);
          CHECK(std::count(hull.begin(), hull.end(), 4) == 0);
        }
  }
  SUBCASE("the three-cell fan makes the interior point a vertex everywhere") {
    for (const SubdivisionCell& c : subs[6].cells) {
      auto hull = convex_hull_2d(pc, c.points);
      CHECK(std::count(hull.begin(), hull.end(), 4) == 1);
    }
  }
}

TEST_CASE("corank subdivisions") {
  SUBCASE("uniform matroids are trivial") {
    Subdivision s = corank_subdivision(uniform(2, 5));
    REQUIRE(s.cells.size() == 1);
    CHECK(s.cells[0].points.size() == 10);
  }
  SUBCASE("one raised vertex splits the octahedron") {
    Matroid m = nested_matroid(
        RankedChain{4, {Subset::of({1, 2}, 4), Subset::full_set(4)}, {1, 2}});
    Subdivision s = corank_subdivision(m);
    check_cells(s, {{1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}});
    check_witnesses(s);
    // the matroid's own bases form one of the cells
    auto fams = cells_as_basis_sets(s);
    std::vector<std::uint32_t> own;
    for (const Subset& b : m.bases()) own.push_back(b.bits());
    CHECK(fams.count(own) == 1);
  }
  SUBCASE("a maximal cell of a three-way split reproduces all three cells") {
    MultiSplit ms(RankedPartition{
        6, {Subset::of({1, 2}, 6), Subset::of({3, 4}, 6), Subset::of({5, 6}, 6)}, {1, 1, 1}});
    auto mc = multisplit_cells(ms);
    for (const Matroid& cell : mc.maximal) {
      Subdivision s = corank_subdivision(cell);
      REQUIRE(s.cells.size() == 3);
      check_witnesses(s);
      CHECK(cells_as_basis_sets(s) == maximal_as_basis_sets(mc));
    }
  }
  SUBCASE("the same reproduction holds across all small splits") {
    for (int n = 4; n <= 5; ++n)
      for (int d = 1; d < n; ++d)
        for (int k = 2; k <= std::min(d, n - d); ++k)
          for (const MultiSplit& ms : enumerate_multisplits(d, n, k)) {
            auto mc = multisplit_cells(ms);
            Subdivision s = corank_subdivision(mc.maximal[0]);
            CHECK(cells_as_basis_sets(s) == maximal_as_basis_sets(mc));
          }
  }
  SUBCASE("spot sample on seven elements") {
    MultiSplit ms = enumerate_multisplits(3, 7, 2).front();
    auto mc = multisplit_cells(ms);
    Subdivision s = corank_subdivision(mc.maximal[1]);
    REQUIRE(s.cells.size() == 2);
    CHECK(cells_as_basis_sets(s) == maximal_as_basis_sets(mc));
  }
}

TEST_CASE("matroid subdivision recognition") {
  SUBCASE("splits and the trivial subdivision qualify") {
    CHECK(is_matroid_subdivision(corank_subdivision(uniform(2, 4))));
    for (const MultiSplit& ms : enumerate_multisplits(2, 5, 2))
      CHECK(is_matroid_subdivision(corank_subdivision(multisplit_cells(ms).maximal[0])));
  }
  SUBCASE("two raised vertices sharing an element do not") {
    Lifting p(4, 2);
    p.at(Subset::of({1, 2}, 4)) = 1;
    p.at(Subset::of({1, 3}, 4)) = 1;
    Subdivision s = regular_subdivision(hypersimplex_configuration(2, 4), p.heights);
    check_witnesses(s);
    CHECK_FALSE(is_matroid_subdivision(s));
  }
  SUBCASE("rejects non-hypersimplex configurations") {
    Subdivision s = regular_subdivision(five_points(), H({0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(is_matroid_subdivision(s), std::invalid_argument);
  }
}

TEST_CASE("three-term relations") {
  SUBCASE("examples on four elements") {
    Lifting zero(4, 2);
    CHECK(is_tropical_plucker(zero));
    Lifting one_up(4, 2);
    one_up.at(Subset::of({1, 2}, 4)) = 1;
    CHECK(is_tropical_plucker(one_up));  // min(1,0,0) still attained twice
    Lifting both(4, 2);
    both.at(Subset::of({1, 2}, 4)) = 1;
    both.at(Subset::of({3, 4}, 4)) = 1;
    CHECK(is_tropical_plucker(both));
    Lifting down(4, 2);
    down.at(Subset::of({1, 2}, 4)) = -1;
    CHECK_FALSE(is_tropical_plucker(down));  // unique minimum
  }
  SUBCASE("corank vectors of matroids pass") {
    Matroid m = nested_matroid(
        RankedChain{4, {Subset::of({1, 2}, 4), Subset::full_set(4)}, {1, 2}});
    CHECK(is_tropical_plucker(corank_vector(m)));
    for (const Matroid& nm : testcorpus::all_nested_matroids(5))
      CHECK(is_tropical_plucker(corank_vector(nm)));
  }
  SUBCASE("degenerate ranks are vacuous") {
    CHECK(is_tropical_plucker(Lifting(4, 0)));
    CHECK(is_tropical_plucker(Lifting(4, 1)));
    Lifting p(4, 3);
    p.at(Subset::of({1, 2, 3}, 4)) = -7;
    CHECK(is_tropical_plucker(p));
  }
}

TEST_CASE("linearity of the secondary cone") {
  SUBCASE("a two-cell split sits on a ray") {
    Matroid m = nested_matroid(
        RankedChain{4, {Subset::of({1, 2}, 4), Subset::full_set(4)}, {1, 2}});
    Subdivision s = corank_subdivision(m);
    auto lin = secondary_linearity_dimension(s.config, s);
    CHECK(lin.dimension == 5);
    CHECK(lin.is_coarsest);
  }
  SUBCASE("the trivial subdivision carries only globally affine heights") {
    Subdivision s = corank_subdivision(uniform(2, 4));
    auto lin = secondary_linearity_dimension(s.config, s);
    CHECK(lin.dimension == 4);
    CHECK_FALSE(lin.is_coarsest);
  }
  SUBCASE("every small split is coarsest with one extra dimension") {
    for (int n = 4; n <= 5; ++n)
      for (int d = 1; d < n; ++d)
        for (int k = 2; k <= std::min(d, n - d); ++k)
          for (const MultiSplit& ms : enumerate_multisplits(d, n, k)) {
            Subdivision s = corank_subdivision(multisplit_cells(ms).maximal[0]);
            auto lin = secondary_linearity_dimension(s.config, s);
            CHECK(lin.dimension == n + 1);
            CHECK(lin.is_coarsest);
          }
  }
  SUBCASE("a full triangulation refines every lifting") {
    std::mt19937_64 gen(424242);
    PointConfiguration pc = hypersimplex_configuration(2, 5);
    std::vector<Rat> h;
    for (int i = 0; i < pc.size(); ++i) h.push_back(testcorpus::random_rat(gen, -60, 60, 16));
    Subdivision s = regular_subdivision(pc, h);
    check_witnesses(s);
    for (const SubdivisionCell& c : s.cells) REQUIRE(c.points.size() == 5);
    auto lin = secondary_linearity_dimension(pc, s);
    CHECK(lin.dimension == pc.size());
  }
  SUBCASE("points outside every cell are rejected") {
    Subdivision s = regular_subdivision(line3(), H({0, 1, 0}));  // middle point above
    CHECK_THROWS_AS(secondary_linearity_dimension(line3(), s), std::invalid_argument);
  }
}

TEST_CASE("covering through the basis cell") {
  CHECK(verify_corank_covering(uniform(2, 5)));
  CHECK(verify_corank_covering(nested_matroid(
      RankedChain{4, {Subset::of({1, 2}, 4), Subset::full_set(4)}, {1, 2}})));
  for (const Matroid& m : testcorpus::all_nested_matroids(5))
    CHECK(verify_corank_covering(m));
}

TEST_CASE("subdivision comparison and assembly") {
  PointConfiguration sq = product_configuration(2, 2);
  Subdivision d1 = regular_subdivision(sq, H({1, 0, 0, 0}));
  Subdivision d2 = regular_subdivision(sq, H({0, 1, 1, 0}));
  SUBCASE("reflexive, order-free, and discriminating") {
    CHECK(subdivisions_equal(d1, d1));
    Subdivision re = subdivision_from_cells(sq, H({1, 0, 0, 0}), {{1, 2, 3}, {0, 1, 2}});
    CHECK(subdivisions_equal(d1, re));
    CHECK_FALSE(subdivisions_equal(d1, d2));
    CHECK_THROWS_AS(subdivisions_equal(d1, regular_subdivision(line3(), H({0, 0, 0}))),
                    std::invalid_argument);
  }
  SUBCASE("assembly validation") {
    CHECK_THROWS_AS(subdivision_from_cells(sq, H({0, 0, 0}), {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(subdivision_from_cells(sq, H({0, 0, 0, 0}), {}), std::invalid_argument);
    CHECK_THROWS_AS(subdivision_from_cells(sq, H({0, 0, 0, 0}), {{0, 0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(subdivision_from_cells(sq, H({0, 0, 0, 0}), {{0, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(subdivision_from_cells(sq, H({0, 0, 0, 0}), {{0, 1}, {1, 0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("height transformations that preserve the subdivision") {
  std::mt19937_64 gen(99173);
  PointConfiguration pc = hypersimplex_configuration(2, 5);
  std::vector<Rat> h;
  for (int i = 0; i < pc.size(); ++i) h.push_back(testcorpus::random_rat(gen, -40, 40, 12));
  Subdivision base = regular_subdivision(pc, h);

  SUBCASE("positive scaling, including magnitudes beyond machine words") {
    Rat big(mpz_class(1) << 100);
    std::vector<Rat> scaled;
    for (const Rat& x : h) scaled.push_back(x * big);
    Subdivision s = regular_subdivision(pc, scaled);
    check_witnesses(s);
    CHECK(subdivisions_equal(base, s));
  }
  SUBCASE("adding a globally affine function") {
    std::vector<Rat> shift = h;
    std::vector<Rat> a;
    for (int i = 0; i < 5; ++i) a.push_back(testcorpus::random_rat(gen, -9, 9, 4));
    auto subs = all_subsets_of_size(5, 2);
    for (size_t i = 0; i < subs.size(); ++i)
      for (int e : subs[i].elements()) shift[i] += a[e - 1];
    Subdivision s = regular_subdivision(pc, shift);
    check_witnesses(s);
    CHECK(subdivisions_equal(base, s));
  }
}

TEST_CASE("planar hulls") {
  PointConfiguration pc = five_points();
  SUBCASE("square hull in counter-clockwise order") {
    auto hull = convex_hull_2d(pc, {0, 1, 2, 3, 4});
    REQUIRE(hull.size() == 4);
    CHECK(std::set<int>(hull.begin(), hull.end()) == std::set<int>{0, 1, 2, 3});
    Rat area2(0);
    for (size_t i = 0; i < hull.size(); ++i) {
      const auto& p = pc.points[hull[i]];
      const auto& q = pc.points[hull[(i + 1) % hull.size()]];
      area2 += p[0] * q[1] - q[0] * p[1];
    }
    CHECK(area2 == 18);  // twice the square's area, positive means CCW
  }
  SUBCASE("collinear points collapse to a segment") {
    auto hull = convex_hull_2d(pc, {0, 3, 4});
    REQUIRE(hull.size() == 2);
    CHECK(std::set<int>(hull.begin(), hull.end()) == std::set<int>{0, 3});
  }
  SUBCASE("planar only") {
    CHECK_THROWS_AS(convex_hull_2d(hypersimplex_configuration(2, 4), {0, 1, 2}),
                    std::invalid_argument);
  }
}

TEST_SUITE_END();
