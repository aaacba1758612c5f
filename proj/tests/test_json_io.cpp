#include <string>
#include <vector>

#include "doctest.h"
#include "hypersplit/json_io.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/stiefel.hpp"
#include "hypersplit/subdivision.hpp"

using namespace hypersplit;

namespace {

Matroid five_basis_matroid() {
  return nested_matroid(
      RankedChain{4, {Subset::of({1, 2}, 4), Subset::full_set(4)}, {1, 2}});
}

MultiSplit octa_split() {
  return MultiSplit(
      RankedPartition{4, {Subset::of({1, 2}, 4), Subset::of({3, 4}, 4)}, {1, 1}});
}

// serialize -> parse -> rebuild -> serialize must reproduce the bytes
template <class T, class ToJson, class FromJson>
void roundtrip(const T& value, ToJson to_json, FromJson from_json) {
  std::string text = serialize(to_json(value));
  T back = from_json(parse_json(text));
  CHECK(serialize(to_json(back)) == text);
}

}  // namespace

TEST_SUITE_BEGIN("json");

TEST_CASE("byte-identical round-trips") {
  SUBCASE("matroids") {
    roundtrip(five_basis_matroid(), matroid_to_json, matroid_from_json);
    roundtrip(uniform(2, 4), matroid_to_json, matroid_from_json);
    CHECK(matroid_from_json(matroid_to_json(five_basis_matroid())) == five_basis_matroid());
  }
  SUBCASE("multi-splits") {
    roundtrip(octa_split(), multisplit_to_json, multisplit_from_json);
    MultiSplit three(RankedPartition{
        6, {Subset::of({1, 2}, 6), Subset::of({3, 4}, 6), Subset::of({5, 6}, 6)}, {1, 1, 1}});
    roundtrip(three, multisplit_to_json, multisplit_from_json);
    CHECK(multisplit_from_json(multisplit_to_json(three)) == three);
  }
  SUBCASE("product liftings") {
    ProductLifting pl(5, Subset::of({2, 4}, 5));
    pl.at(2, 1) = rat(3, 2);
    pl.at(4, 5) = rat(-7, 3);
    roundtrip(pl, product_lifting_to_json, product_lifting_from_json);
    CHECK(product_lifting_from_json(product_lifting_to_json(pl)) == pl);
  }
  SUBCASE("subdivisions over hypersimplex vertices") {
    Subdivision s = corank_subdivision(five_basis_matroid());
    roundtrip(s, subdivision_to_json, subdivision_from_json);
    Json j = subdivision_to_json(s);
    CHECK(j.at("config") == "hypersimplex");
    CHECK(j.at("n") == 4);
    CHECK(j.at("d") == 2);
    CHECK(subdivisions_equal(subdivision_from_json(j), s));
  }
  SUBCASE("subdivisions over explicit points") {
    PointConfiguration pc(2, {{Rat(0), Rat(0)},
                              {Rat(3), Rat(0)},
                              {Rat(0), Rat(3)},
                              {Rat(3), Rat(3)},
                              {Rat(1), Rat(1)}});
    Subdivision s = regular_subdivision(
        pc, {Rat(0), Rat(0), Rat(0), Rat(3), Rat(-1)});
    roundtrip(s, subdivision_to_json, subdivision_from_json);
    Json j = subdivision_to_json(s);
    CHECK(j.at("config").is_object());
    CHECK(j.at("n") == 2);
    CHECK(j.at("d") == 0);
  }
  SUBCASE("catalogs") {
    Catalog c{2, 5, 2, enumerate_multisplits(2, 5, 2)};
    REQUIRE(c.splits.size() == 10);
    roundtrip(c, catalog_to_json, catalog_from_json);
    Json j = catalog_to_json(c);
    CHECK(j.at("count") == 10);
    CHECK(j.at("tool_version").is_string());
  }
  SUBCASE("class catalogs") {
    ClassCatalog c{3, 6, 3, symmetry_classes(3, 6, 3)};
    REQUIRE(c.classes.size() == 1);
    roundtrip(c, class_catalog_to_json, class_catalog_from_json);
  }
}

TEST_CASE("reader accepts any cyclic block order") {
  Json j = multisplit_to_json(octa_split());
  Json rotated = j;
  rotated["blocks"] = Json::array({j["blocks"][1], j["blocks"][0]});
  CHECK(multisplit_from_json(rotated) == octa_split());
}

TEST_CASE("strict rejection of malformed documents") {
  SUBCASE("broken syntax") {
    CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
  }
  SUBCASE("missing and unknown keys") {
    Json j = matroid_to_json(uniform(2, 4));
    Json missing = j;
    missing.erase("bases");
    CHECK_THROWS_WITH_AS(matroid_from_json(missing), "matroid json: missing key 'bases'",
                         std::invalid_argument);
    Json extra = j;
    extra["extra"] = 1;
    CHECK_THROWS_WITH_AS(matroid_from_json(extra), "matroid json: unexpected key 'extra'",
                         std::invalid_argument);
  }
  SUBCASE("matroid content rules") {
    Json j = matroid_to_json(uniform(2, 4));
    Json dup = j;
    dup["bases"].push_back(Json::array({1, 2}));
    CHECK_THROWS_WITH_AS(matroid_from_json(dup), "matroid json: duplicate basis",
                         std::invalid_argument);
    Json unsorted = j;
    unsorted["bases"][0] = Json::array({2, 1});
    CHECK_THROWS_AS(matroid_from_json(unsorted), std::invalid_argument);
    Json bad;
    bad["n"] = 4;
    bad["d"] = 2;
    bad["bases"] = Json::array({Json::array({1, 2}), Json::array({3, 4})});
    CHECK_THROWS_WITH_AS(matroid_from_json(bad), "matroid json: bases fail the exchange axiom",
                         std::invalid_argument);
  }
  SUBCASE("multi-split content rules") {
    Json j = multisplit_to_json(octa_split());
    Json wrong_d = j;
    wrong_d["d"] = 3;
    CHECK_THROWS_WITH_AS(multisplit_from_json(wrong_d),
                         "multisplit json: 'd' does not equal the sum of block ranks",
                         std::invalid_argument);
    Json bad_rank = j;
    bad_rank["blocks"][0]["rank"] = 2;  // equals the block size
    CHECK_THROWS_AS(multisplit_from_json(bad_rank), std::invalid_argument);
  }
  SUBCASE("product-lifting content rules") {
    ProductLifting pl(4, Subset::of({1, 3}, 4));
    Json j = product_lifting_to_json(pl);
    Json short_lambda = j;
    short_lambda["lambda"].erase(0);
    CHECK_THROWS_WITH_AS(product_lifting_from_json(short_lambda),
                         "product-lifting json: 'lambda' must list every (i, j) pair exactly once",
                         std::invalid_argument);
    Json dup = j;
    dup["lambda"][1] = dup["lambda"][0];
    CHECK_THROWS_WITH_AS(product_lifting_from_json(dup),
                         "product-lifting json: duplicate lambda entry", std::invalid_argument);
    Json bad_rat = j;
    bad_rat["lambda"][0]["h"] = "1.5";
    CHECK_THROWS_AS(product_lifting_from_json(bad_rat), std::invalid_argument);
    Json off_base = j;
    off_base["lambda"][0] = Json{{"i", 2}, {"j", 4}, {"h", "0"}};
    CHECK_THROWS_WITH_AS(product_lifting_from_json(off_base),
                         "product-lifting json: lambda index outside base x complement",
                         std::invalid_argument);
  }
  SUBCASE("subdivision content rules") {
    Json j = subdivision_to_json(corank_subdivision(five_basis_matroid()));
    Json bad_config = j;
    bad_config["config"] = "simplex";
    CHECK_THROWS_AS(subdivision_from_json(bad_config), std::invalid_argument);
    Json bad_height = j;
    bad_height["heights"][0] = "x";
    CHECK_THROWS_AS(subdivision_from_json(bad_height), std::invalid_argument);
    Json short_heights = j;
    short_heights["heights"].erase(0);
    CHECK_THROWS_WITH_AS(subdivision_from_json(short_heights),
                         "subdivision json: 'heights' must list one rational per point",
                         std::invalid_argument);
    Json bad_cell = j;
    bad_cell["cells"][0] = Json::array({0, 99});
    CHECK_THROWS_AS(subdivision_from_json(bad_cell), std::invalid_argument);
    Json dup_cell = j;
    dup_cell["cells"].push_back(dup_cell["cells"][0]);
    CHECK_THROWS_AS(subdivision_from_json(dup_cell), std::invalid_argument);
  }
  SUBCASE("catalog content rules") {
    Catalog c{2, 5, 2, enumerate_multisplits(2, 5, 2)};
    Json j = catalog_to_json(c);
    Json wrong_version = j;
    wrong_version["tool_version"] = "0.0.0";
    CHECK_THROWS_WITH_AS(catalog_from_json(wrong_version), "catalog json: unsupported tool version",
                         std::invalid_argument);
    Json wrong_count = j;
    wrong_count["count"] = 11;
    CHECK_THROWS_WITH_AS(catalog_from_json(wrong_count),
                         "catalog json: 'count' does not match the number of records",
                         std::invalid_argument);
    Json swapped = j;
    std::swap(swapped["splits"][0], swapped["splits"][1]);
    CHECK_THROWS_WITH_AS(catalog_from_json(swapped),
                         "catalog json: records must be canonically sorted and distinct",
                         std::invalid_argument);
    Json alien = j;
    alien["splits"][0] = multisplit_to_json(octa_split());
    CHECK_THROWS_WITH_AS(catalog_from_json(alien),
                         "catalog json: record parameters disagree with the header",
                         std::invalid_argument);
  }
  SUBCASE("class-catalog content rules") {
    ClassCatalog c{3, 6, 2, symmetry_classes(3, 6, 2)};
    Json j = class_catalog_to_json(c);
    Json bad_orbit = j;
    bad_orbit["classes"][0]["orbit_size"] = 0;
    CHECK_THROWS_WITH_AS(class_catalog_from_json(bad_orbit),
                         "class-catalog json: 'orbit_size' must be positive",
                         std::invalid_argument);
  }
}

TEST_SUITE_END();
