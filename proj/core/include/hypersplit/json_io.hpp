#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypersplit/matroid.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/stiefel.hpp"
#include "hypersplit/subdivision.hpp"

namespace hypersplit {

using Json = nlohmann::ordered_json;

// All writers emit a fixed key order; serialize() renders two-space-indented
// JSON with a trailing newline, so write-read-write round-trips are
// byte-identical.  All readers validate strictly and throw
// std::invalid_argument with a message naming the violated rule.

std::string serialize(const Json& j);
Json parse_json(const std::string& text);

// { "n", "d", "bases": [[elements ascending], ...] } — bases sorted
// colexicographically; the family must satisfy basis exchange.
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// { "n", "d", "blocks": [{ "elements", "rank" }, ...] } — block order is the
// cyclic order; the canonical rotation is applied on write and restored on
// read.
Json multisplit_to_json(const MultiSplit& ms);
MultiSplit multisplit_from_json(const Json& j);

// { "n", "base", "lambda": [{ "i", "j", "h": "num/den" }, ...] } — rows by
// ascending i, then ascending j.
Json product_lifting_to_json(const ProductLifting& pl);
ProductLifting product_lifting_from_json(const Json& j);

// { "config": "hypersimplex" | { "m", "points": [["num/den", ...], ...] },
//   "n", "d", "heights": ["num/den", ...], "cells": [[point index, ...], ...] }
// Heights follow the configuration order (colex for hypersimplices); cells are
// sorted index lists.  Explicit configurations carry n = m and d = 0.
Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

struct Catalog {
  int d = 0, n = 0, k = 0;
  std::vector<MultiSplit> splits;  // canonically sorted, no duplicates
};

// { "d", "n", "k", "count", "tool_version", "splits": [multi-split, ...] }
Json catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const Json& j);

struct ClassCatalog {
  int d = 0, n = 0, k = 0;
  std::vector<SymmetryClass> classes;
};

// { "d", "n", "k", "count", "tool_version",
//   "classes": [{ "orbit_size", "split" }, ...] }
Json class_catalog_to_json(const ClassCatalog& c);
ClassCatalog class_catalog_from_json(const Json& j);

}  // namespace hypersplit
