#include "hypersplit/json_io.hpp"

#include <climits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "hypersplit/version.hpp"

namespace hypersplit {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& detail) {
  throw std::invalid_argument(what + ": " + detail);
}

void expect_object(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) fail(what, "expected a JSON object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) fail(what, "unexpected key '" + item.key() + "'");
  for (const char* k : keys)
    if (!j.contains(k)) fail(what, std::string("missing key '") + k + "'");
}

int get_int(const Json& j, const char* key, const char* what) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) fail(what, std::string("'") + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < INT_MIN || x > INT_MAX) fail(what, std::string("'") + key + "' out of range");
  return static_cast<int>(x);
}

std::string get_string(const Json& j, const char* key, const char* what) {
  const Json& v = j.at(key);
  if (!v.is_string()) fail(what, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> int_array(const Json& v, const char* what, const char* ctx) {
  if (!v.is_array()) fail(what, std::string(ctx) + " must be an array");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) fail(what, std::string(ctx) + " must contain integers");
    const auto x = e.get<long long>();
    if (x < INT_MIN || x > INT_MAX) fail(what, std::string(ctx) + " entry out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<int> element_list(const Json& v, int n, const char* what, const char* ctx) {
  std::vector<int> out = int_array(v, what, ctx);
  if (out.empty()) fail(what, std::string(ctx) + " must be nonempty");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > n) fail(what, std::string(ctx) + " element out of range");
    if (i > 0 && out[i] <= out[i - 1])
      fail(what, std::string(ctx) + " must be strictly increasing");
  }
  return out;
}

Rat rat_field(const Json& v, const char* what, const char* ctx) {
  if (!v.is_string()) fail(what, std::string(ctx) + " must be a \"num/den\" string");
  try {
    return rat_parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(what, std::string(ctx) + ": " + e.what());
  }
}

}  // namespace

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.ground_size();
  j["d"] = m.rank();
  Json bases = Json::array();
  for (const Subset& b : m.bases()) bases.push_back(b.elements());
  j["bases"] = std::move(bases);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  const char* what = "matroid json";
  expect_object(j, {"n", "d", "bases"}, what);
  const int n = get_int(j, "n", what);
  const int d = get_int(j, "d", what);
  if (n < 1 || n > Subset::kMaxGround) fail(what, "'n' out of range");
  if (d < 0 || d > n) fail(what, "'d' out of range");
  const Json& arr = j.at("bases");
  if (!arr.is_array() || arr.empty()) fail(what, "'bases' must be a nonempty array");
  std::vector<Subset> family;
  std::set<std::uint32_t> seen;
  for (const Json& b : arr) {
    std::vector<int> elems = element_list(b, n, what, "basis");
    if (static_cast<int>(elems.size()) != d) fail(what, "basis of wrong size");
    Subset s = Subset::of(elems, n);
    if (!seen.insert(s.bits()).second) fail(what, "duplicate basis");
    family.push_back(s);
  }
  if (!is_matroid(n, d, family)) fail(what, "bases fail the exchange axiom");
  return Matroid(n, d, std::move(family));
}

// ---------------------------------------------------------------------------

Json multisplit_to_json(const MultiSplit& ms) {
  Json j;
  j["n"] = ms.n();
  j["d"] = ms.d();
  Json blocks = Json::array();
  const RankedPartition& p = ms.partition();
  for (int t = 0; t < p.k(); ++t) {
    Json b;
    b["elements"] = p.blocks[t].elements();
    b["rank"] = p.ranks[t];
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

MultiSplit multisplit_from_json(const Json& j) {
  const char* what = "multisplit json";
  expect_object(j, {"n", "d", "blocks"}, what);
  const int n = get_int(j, "n", what);
  const int d = get_int(j, "d", what);
  if (n < 1 || n > Subset::kMaxGround) fail(what, "'n' out of range");
  const Json& arr = j.at("blocks");
  if (!arr.is_array() || arr.empty()) fail(what, "'blocks' must be a nonempty array");
  RankedPartition p;
  p.n = n;
  for (const Json& b : arr) {
    expect_object(b, {"elements", "rank"}, what);
    p.blocks.push_back(Subset::of(element_list(b.at("elements"), n, what, "block"), n));
    p.ranks.push_back(get_int(b, "rank", what));
  }
  MultiSplit ms{std::move(p)};
  if (ms.d() != d) fail(what, "'d' does not equal the sum of block ranks");
  return ms;
}

// ---------------------------------------------------------------------------

Json product_lifting_to_json(const ProductLifting& pl) {
  Json j;
  j["n"] = pl.n;
  j["base"] = pl.base.elements();
  Json lambda = Json::array();
  for (int i : pl.base.elements())
    for (int c : pl.base.complement().elements()) {
      Json e;
      e["i"] = i;
      e["j"] = c;
      e["h"] = rat_str(pl.at(i, c));
      lambda.push_back(std::move(e));
    }
  j["lambda"] = std::move(lambda);
  return j;
}

ProductLifting product_lifting_from_json(const Json& j) {
  const char* what = "product-lifting json";
  expect_object(j, {"n", "base", "lambda"}, what);
  const int n = get_int(j, "n", what);
  if (n < 1 || n > Subset::kMaxGround) fail(what, "'n' out of range");
  const Subset base = Subset::of(element_list(j.at("base"), n, what, "base"), n);
  ProductLifting pl(n, base);
  const Json& arr = j.at("lambda");
  if (!arr.is_array()) fail(what, "'lambda' must be an array");
  const std::size_t want = static_cast<std::size_t>(base.size()) * (n - base.size());
  if (arr.size() != want) fail(what, "'lambda' must list every (i, j) pair exactly once");
  std::set<std::pair<int, int>> seen;
  for (const Json& e : arr) {
    expect_object(e, {"i", "j", "h"}, what);
    const int i = get_int(e, "i", what);
    const int c = get_int(e, "j", what);
    if (!seen.insert({i, c}).second) fail(what, "duplicate lambda entry");
    const Rat h = rat_field(e.at("h"), what, "lambda height");
    try {
      pl.at(i, c) = h;
    } catch (const std::invalid_argument&) {
      fail(what, "lambda index outside base x complement");
    }
  }
  return pl;
}

// ---------------------------------------------------------------------------

Json subdivision_to_json(const Subdivision& s) {
  Json j;
  const int m = s.config.m;
  bool hyper = false;
  int d = 0;
  if (m >= 1 && m <= Subset::kMaxGround && !s.config.points.empty()) {
    int dd = 0;
    bool zero_one = true;
    for (const Rat& c : s.config.points[0]) {
      if (c == 1)
        ++dd;
      else if (c != 0) {
        zero_one = false;
        break;
      }
    }
    if (zero_one && s.config.points.size() == binomial(m, dd) &&
        s.config == hypersimplex_configuration(dd, m)) {
      hyper = true;
      d = dd;
    }
  }
  if (hyper) {
    j["config"] = "hypersimplex";
    j["n"] = m;
    j["d"] = d;
  } else {
    Json cfg;
    cfg["m"] = m;
    Json pts = Json::array();
    for (const auto& p : s.config.points) {
      Json row = Json::array();
      for (const Rat& c : p) row.push_back(rat_str(c));
      pts.push_back(std::move(row));
    }
    cfg["points"] = std::move(pts);
    j["config"] = std::move(cfg);
    j["n"] = m;
    j["d"] = 0;
  }
  Json hs = Json::array();
  for (const Rat& h : s.heights) hs.push_back(rat_str(h));
  j["heights"] = std::move(hs);
  Json cells = Json::array();
  for (const SubdivisionCell& c : s.cells) cells.push_back(c.points);
  j["cells"] = std::move(cells);
  return j;
}

Subdivision subdivision_from_json(const Json& j) {
  const char* what = "subdivision json";
  expect_object(j, {"config", "n", "d", "heights", "cells"}, what);
  const int n = get_int(j, "n", what);
  const int d = get_int(j, "d", what);
  const Json& cfg = j.at("config");

  PointConfiguration pc;
  if (cfg.is_string()) {
    if (cfg.get<std::string>() != "hypersimplex")
      fail(what, "'config' must be \"hypersimplex\" or an explicit point object");
    if (n < 1 || n > Subset::kMaxGround) fail(what, "'n' out of range");
    if (d < 0 || d > n) fail(what, "'d' out of range");
    pc = hypersimplex_configuration(d, n);
  } else {
    expect_object(cfg, {"m", "points"}, what);
    const int m = get_int(cfg, "m", what);
    if (m != n) fail(what, "'n' must equal the explicit configuration dimension");
    if (d != 0) fail(what, "'d' must be 0 for explicit configurations");
    const Json& pts = cfg.at("points");
    if (!pts.is_array() || pts.empty()) fail(what, "'points' must be a nonempty array");
    std::vector<std::vector<Rat>> points;
    for (const Json& p : pts) {
      if (!p.is_array() || static_cast<int>(p.size()) != m)
        fail(what, "point of wrong dimension");
      std::vector<Rat> row;
      for (const Json& c : p) row.push_back(rat_field(c, what, "coordinate"));
      points.push_back(std::move(row));
    }
    try {
      pc = PointConfiguration(m, std::move(points));
    } catch (const std::invalid_argument& e) {
      fail(what, e.what());
    }
  }

  const Json& hs = j.at("heights");
  if (!hs.is_array() || static_cast<int>(hs.size()) != pc.size())
    fail(what, "'heights' must list one rational per point");
  std::vector<Rat> heights;
  for (const Json& h : hs) heights.push_back(rat_field(h, what, "height"));

  const Json& cs = j.at("cells");
  if (!cs.is_array()) fail(what, "'cells' must be an array");
  std::vector<std::vector<int>> cells;
  for (const Json& c : cs) cells.push_back(int_array(c, what, "cell"));
  try {
    return subdivision_from_cells(pc, heights, cells);
  } catch (const std::invalid_argument& e) {
    fail(what, e.what());
  }
}

// ---------------------------------------------------------------------------

Json catalog_to_json(const Catalog& c) {
  Json j;
  j["d"] = c.d;
  j["n"] = c.n;
  j["k"] = c.k;
  j["count"] = c.splits.size();
  j["tool_version"] = kToolVersion;
  Json records = Json::array();
  for (const MultiSplit& ms : c.splits) records.push_back(multisplit_to_json(ms));
  j["splits"] = std::move(records);
  return j;
}

Catalog catalog_from_json(const Json& j) {
  const char* what = "catalog json";
  expect_object(j, {"d", "n", "k", "count", "tool_version", "splits"}, what);
  Catalog c;
  c.d = get_int(j, "d", what);
  c.n = get_int(j, "n", what);
  c.k = get_int(j, "k", what);
  if (get_string(j, "tool_version", what) != kToolVersion)
    fail(what, "unsupported tool version");
  const Json& records = j.at("splits");
  if (!records.is_array()) fail(what, "'splits' must be an array");
  if (get_int(j, "count", what) != static_cast<int>(records.size()))
    fail(what, "'count' does not match the number of records");
  for (const Json& r : records) {
    MultiSplit ms = multisplit_from_json(r);
    if (ms.n() != c.n || ms.d() != c.d || ms.k() != c.k)
      fail(what, "record parameters disagree with the header");
    if (!c.splits.empty() && !(c.splits.back().encoding() < ms.encoding()))
      fail(what, "records must be canonically sorted and distinct");
    c.splits.push_back(std::move(ms));
  }
  return c;
}

Json class_catalog_to_json(const ClassCatalog& c) {
  Json j;
  j["d"] = c.d;
  j["n"] = c.n;
  j["k"] = c.k;
  j["count"] = c.classes.size();
  j["tool_version"] = kToolVersion;
  Json arr = Json::array();
  for (const SymmetryClass& sc : c.classes) {
    Json e;
    e["orbit_size"] = sc.orbit_size;
    e["split"] = multisplit_to_json(sc.representative);
    arr.push_back(std::move(e));
  }
  j["classes"] = std::move(arr);
  return j;
}

ClassCatalog class_catalog_from_json(const Json& j) {
  const char* what = "class-catalog json";
  expect_object(j, {"d", "n", "k", "count", "tool_version", "classes"}, what);
  ClassCatalog c;
  c.d = get_int(j, "d", what);
  c.n = get_int(j, "n", what);
  c.k = get_int(j, "k", what);
  if (get_string(j, "tool_version", what) != kToolVersion)
    fail(what, "unsupported tool version");
  const Json& arr = j.at("classes");
  if (!arr.is_array()) fail(what, "'classes' must be an array");
  if (get_int(j, "count", what) != static_cast<int>(arr.size()))
    fail(what, "'count' does not match the number of classes");
  for (const Json& e : arr) {
    expect_object(e, {"orbit_size", "split"}, what);
    const int orbit = get_int(e, "orbit_size", what);
    if (orbit < 1) fail(what, "'orbit_size' must be positive");
    SymmetryClass sc{multisplit_from_json(e.at("split")),
                     static_cast<std::uint64_t>(orbit)};
    if (sc.representative.n() != c.n || sc.representative.d() != c.d ||
        sc.representative.k() != c.k)
      fail(what, "class parameters disagree with the header");
    if (!c.classes.empty() &&
        !(c.classes.back().representative.encoding() < sc.representative.encoding()))
      fail(what, "classes must be canonically sorted and distinct");
    c.classes.push_back(std::move(sc));
  }
  return c;
}

}  // namespace hypersplit
