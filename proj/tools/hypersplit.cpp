// Command-line surface: counting, enumeration, verification, subdivision,
// lifting maps, and SVG plots, all over exact rationals.
//
// Exit codes: 0 success / all checks pass, 1 failed check, 2 usage or parse
// error, 3 formula-vs-enumeration mismatch in --oracle mode, 4 I/O failure.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hypersplit/json_io.hpp"
#include "hypersplit/matroid.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/stiefel.hpp"
#include "hypersplit/subdivision.hpp"
#include "hypersplit/subset.hpp"
#include "hypersplit/version.hpp"

namespace hs = hypersplit;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

int thread_count() {
  const char* env = std::getenv("HYPERSPLIT_THREADS");
  if (!env) return 1;
  try {
    const int t = std::stoi(env);
    return t >= 1 ? t : 1;
  } catch (...) {
    return 1;
  }
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountArgs {
  bool hypersimplex = false, product = false, oracle = false;
  int d = 0, n = 0, l = 0, k = 0;
};

int run_count(const CountArgs& a) {
  std::uint64_t formula = 0, enumerated = 0;
  if (a.hypersimplex == a.product)
    throw CLI::ValidationError("count", "choose exactly one of --hypersimplex / --product");
  if (a.hypersimplex) {
    formula = hs::count_multisplits_formula(a.d, a.n, a.k);
    if (a.oracle) enumerated = hs::enumerate_multisplits(a.d, a.n, a.k).size();
  } else {
    formula = hs::count_product_multisplits_formula(a.d, a.l, a.k);
    if (a.oracle) enumerated = hs::enumerate_product_multisplits(a.d, a.l, a.k).size();
  }
  if (a.oracle && formula != enumerated) {
    std::cerr << "oracle mismatch: formula " << formula << ", enumeration " << enumerated
              << "\n";
    return 3;
  }
  std::cout << formula << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate / classes
// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int d = 0, n = 0, k = 0;
  std::string out;
  std::string classes_out;
  bool allow_large = false;
};

int run_enumerate(const EnumerateArgs& a) {
  hs::Catalog cat;
  cat.d = a.d;
  cat.n = a.n;
  cat.k = a.k;
  cat.splits = hs::enumerate_multisplits(a.d, a.n, a.k, a.allow_large);
  write_file(a.out, hs::serialize(hs::catalog_to_json(cat)));
  if (!a.classes_out.empty()) {
    hs::ClassCatalog cc;
    cc.d = a.d;
    cc.n = a.n;
    cc.k = a.k;
    cc.classes = hs::symmetry_classes(a.d, a.n, a.k);
    write_file(a.classes_out, hs::serialize(hs::class_catalog_to_json(cc)));
  }
  return 0;
}

struct ClassesArgs {
  int d = 0, n = 0, k = 0;
  bool have_k = false;
  std::string out;
};

int run_classes(const ClassesArgs& a) {
  if (a.have_k) {
    const auto classes = hs::symmetry_classes(a.d, a.n, a.k);
    if (!a.out.empty()) {
      hs::ClassCatalog cc;
      cc.d = a.d;
      cc.n = a.n;
      cc.k = a.k;
      cc.classes = classes;
      write_file(a.out, hs::serialize(hs::class_catalog_to_json(cc)));
    }
    std::cout << classes.size() << "\n";
    return 0;
  }
  std::uint64_t total = 0;
  for (int k = 2; k <= a.n; ++k) {
    std::vector<hs::SymmetryClass> classes;
    try {
      classes = hs::symmetry_classes(a.d, a.n, k);
    } catch (const std::invalid_argument&) {
      if (k == 2) throw;  // bad (d, n) — not merely an infeasible k
      break;
    }
    if (classes.empty()) continue;
    std::cout << "k=" << k << ": " << classes.size() << "\n";
    total += classes.size();
  }
  std::cout << "total: " << total << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  bool cells = false, exchange = false, corank = false, roundtrip = false, coarseness = false,
       plucker = false, covering = false;
};

struct CheckSet {
  bool cells, exchange, corank, roundtrip, coarseness, plucker, covering;
};

std::vector<std::vector<int>> cell_index_lists(const std::vector<hs::Matroid>& cells) {
  std::vector<std::vector<int>> out;
  for (const hs::Matroid& m : cells) {
    std::vector<int> idx;
    for (const hs::Subset& b : m.bases()) idx.push_back(static_cast<int>(hs::colex_index(b)));
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One verification report; `lines` carries "<check> pass|FAIL|skip" entries.
struct Report {
  std::vector<std::string> lines;
  bool ok = true;

  void add(const std::string& check, bool pass, const std::string& detail = "") {
    lines.push_back(check + (pass ? " pass" : " FAIL" + (detail.empty() ? "" : " — " + detail)));
    ok = ok && pass;
  }
  void skip(const std::string& check) { lines.push_back(check + " skip"); }
};

Report verify_multisplit(const hs::MultiSplit& ms, const CheckSet& cs) {
  Report rep;
  const hs::MultiSplitCells cells = hs::multisplit_cells(ms);
  const int k = ms.k();

  if (cs.cells) {
    bool ok = true;
    std::string detail;
    // Two independent routes to each maximal cell must agree.
    hs::RankedPartition rot = ms.partition();
    for (int t = 0; t < k && ok; ++t) {
      if (!(hs::cells_from_inequalities(rot) == cells.maximal[t])) {
        ok = false;
        detail = "cell routes disagree on rotation " + std::to_string(t);
      }
      std::rotate(rot.blocks.begin(), rot.blocks.begin() + 1, rot.blocks.end());
      std::rotate(rot.ranks.begin(), rot.ranks.begin() + 1, rot.ranks.end());
    }
    if (ok) {
      // The common cell is the intersection of the maximal cells' bases and
      // equals the partition matroid.
      std::vector<hs::Subset> inter = cells.maximal[0].bases();
      for (int t = 1; t < k; ++t) {
        std::vector<hs::Subset> keep;
        for (const hs::Subset& b : inter)
          if (cells.maximal[t].is_basis(b)) keep.push_back(b);
        inter = std::move(keep);
      }
      ok = inter == hs::partition_matroid(ms.partition()).bases() &&
           inter == cells.common.bases();
      if (!ok) detail = "common cell is not the partition matroid";
    }
    rep.add("cells", ok, detail);
  }
  if (cs.exchange) {
    bool ok = hs::is_matroid(ms.n(), ms.d(), cells.common.bases());
    for (const hs::Matroid& m : cells.maximal)
      ok = ok && hs::is_matroid(ms.n(), ms.d(), m.bases());
    rep.add("exchange", ok);
  }
  if (cs.corank) {
    const hs::Subdivision sub = hs::corank_subdivision(cells.maximal[0]);
    std::vector<std::vector<int>> actual;
    for (const hs::SubdivisionCell& c : sub.cells) actual.push_back(c.points);
    std::sort(actual.begin(), actual.end());
    rep.add("corank", actual == cell_index_lists(cells.maximal),
            "corank subdivision does not reproduce the cells");
  }
  if (cs.roundtrip) {
    bool ok = true;
    std::string detail;
    for (const hs::Subset& b : cells.common.bases())
      if (!hs::verify_stiefel_roundtrip(ms, b)) {
        ok = false;
        detail = "base " + b.str();
        break;
      }
    rep.add("roundtrip", ok, detail);
  }
  if (cs.coarseness) {
    const hs::PointConfiguration pc = hs::hypersimplex_configuration(ms.d(), ms.n());
    const hs::Subdivision sub = hs::subdivision_from_cells(
        pc, hs::corank_vector(cells.maximal[0]).heights, cell_index_lists(cells.maximal));
    const hs::LinearityResult lin = hs::secondary_linearity_dimension(pc, sub);
    rep.add("coarseness", lin.is_coarsest && lin.dimension == ms.n() + 1,
            "linearity dimension " + std::to_string(lin.dimension));
  }
  if (cs.plucker)
    rep.add("plucker", hs::is_tropical_plucker(hs::corank_vector(cells.maximal[0])));
  if (cs.covering) {
    bool ok = true;
    for (const hs::Matroid& m : cells.maximal) ok = ok && hs::verify_corank_covering(m);
    rep.add("covering", ok);
  }
  return rep;
}

Report verify_matroid(const hs::Matroid& m, const CheckSet& cs) {
  Report rep;
  if (cs.cells) rep.skip("cells");
  if (cs.exchange) rep.add("exchange", hs::is_matroid(m.ground_size(), m.rank(), m.bases()));
  if (cs.corank) rep.add("corank", hs::is_matroid_subdivision(hs::corank_subdivision(m)));
  if (cs.roundtrip) rep.skip("roundtrip");
  if (cs.coarseness) rep.skip("coarseness");
  if (cs.plucker) rep.add("plucker", hs::is_tropical_plucker(hs::corank_vector(m)));
  if (cs.covering) rep.add("covering", hs::verify_corank_covering(m));
  return rep;
}

int run_verify(const VerifyArgs& a) {
  CheckSet cs{a.cells, a.exchange, a.corank, a.roundtrip, a.coarseness, a.plucker, a.covering};
  if (!(cs.cells || cs.exchange || cs.corank || cs.roundtrip || cs.coarseness || cs.plucker ||
        cs.covering))
    cs = CheckSet{true, true, true, true, true, true, true};

  const hs::Json j = hs::parse_json(read_file(a.in));
  if (!j.is_object()) throw std::invalid_argument("verify: input must be a JSON object");

  std::vector<Report> reports;
  if (j.contains("splits")) {
    const hs::Catalog cat = hs::catalog_from_json(j);
    reports.resize(cat.splits.size());
    const int threads =
        std::min(thread_count(), std::max(1, static_cast<int>(cat.splits.size())));
    if (threads <= 1) {
      for (std::size_t i = 0; i < cat.splits.size(); ++i)
        reports[i] = verify_multisplit(cat.splits[i], cs);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < cat.splits.size(); i += threads)
            reports[i] = verify_multisplit(cat.splits[i], cs);
        });
      for (std::thread& th : pool) th.join();
    }
  } else if (j.contains("blocks")) {
    reports.push_back(verify_multisplit(hs::multisplit_from_json(j), cs));
  } else if (j.contains("bases")) {
    reports.push_back(verify_matroid(hs::matroid_from_json(j), cs));
  } else {
    throw std::invalid_argument("verify: input is not a catalog, multi-split, or matroid");
  }

  bool all_ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const std::string& line : reports[i].lines)
      std::cout << "record " << i << ": " << line << "\n";
    all_ok = all_ok && reports[i].ok;
  }
  std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// subdivide / corank / SVG
// ---------------------------------------------------------------------------

std::string svg_render(const hs::Subdivision& s) {
  const hs::PointConfiguration& pc = s.config;
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& p : pc.points) {
    minx = std::min(minx, p[0].get_d());
    maxx = std::max(maxx, p[0].get_d());
    miny = std::min(miny, p[1].get_d());
    maxy = std::max(maxy, p[1].get_d());
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 360.0 / span, pad = 40.0;
  auto X = [&](const hs::Rat& x) { return pad + (x.get_d() - minx) * scale; };
  auto Y = [&](const hs::Rat& y) { return pad + (maxy - y.get_d()) * scale; };
  const double w = pad * 2 + (maxx - minx) * scale, h = pad * 2 + (maxy - miny) * scale;

  static const char* kFills[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#fcbba1",
                                 "#dadaeb", "#fee391", "#d9d9d9"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    const std::vector<int> hull = hs::convex_hull_2d(pc, s.cells[ci].points);
    svg << "  <polygon points=\"";
    for (int i : hull) svg << X(pc.points[i][0]) << "," << Y(pc.points[i][1]) << " ";
    svg << "\" fill=\"" << kFills[ci % 7]
        << "\" fill-opacity=\"0.7\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < pc.size(); ++i) {
    svg << "  <circle cx=\"" << X(pc.points[i][0]) << "\" cy=\"" << Y(pc.points[i][1])
        << "\" r=\"4\" fill=\"#111\"/>\n";
    svg << "  <text x=\"" << X(pc.points[i][0]) + 7 << "\" y=\"" << Y(pc.points[i][1]) - 7
        << "\" font-size=\"13\" font-family=\"sans-serif\">" << i << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

struct SubdivideArgs {
  bool hypersimplex = false;
  int d = 0, n = 0;
  std::string points_file, heights_file, out, svg;
};

std::vector<hs::Rat> parse_heights_file(const std::string& path) {
  const hs::Json j = hs::parse_json(read_file(path));
  if (!j.is_array()) throw std::invalid_argument("heights file must be a JSON array");
  std::vector<hs::Rat> heights;
  for (const hs::Json& h : j) {
    if (!h.is_string()) throw std::invalid_argument("heights must be \"num/den\" strings");
    heights.push_back(hs::rat_parse(h.get<std::string>()));
  }
  return heights;
}

hs::PointConfiguration parse_points_file(const std::string& path) {
  const hs::Json j = hs::parse_json(read_file(path));
  if (!j.is_object() || !j.contains("m") || !j.contains("points"))
    throw std::invalid_argument("points file must be an object with 'm' and 'points'");
  const int m = j.at("m").get<int>();
  std::vector<std::vector<hs::Rat>> points;
  for (const hs::Json& p : j.at("points")) {
    std::vector<hs::Rat> row;
    for (const hs::Json& c : p) {
      if (!c.is_string()) throw std::invalid_argument("coordinates must be \"num/den\" strings");
      row.push_back(hs::rat_parse(c.get<std::string>()));
    }
    points.push_back(std::move(row));
  }
  return hs::PointConfiguration(m, std::move(points));
}

int run_subdivide(const SubdivideArgs& a) {
  if (a.hypersimplex == !a.points_file.empty())
    throw CLI::ValidationError("subdivide", "choose exactly one of --hypersimplex / --points");
  const hs::PointConfiguration pc =
      a.hypersimplex ? hs::hypersimplex_configuration(a.d, a.n) : parse_points_file(a.points_file);
  const std::vector<hs::Rat> heights = parse_heights_file(a.heights_file);
  const hs::Subdivision sub = hs::regular_subdivision(pc, heights);
  if (!a.out.empty()) write_file(a.out, hs::serialize(hs::subdivision_to_json(sub)));
  if (!a.svg.empty()) {
    if (pc.m != 2)
      throw std::invalid_argument("subdivide: --svg requires a 2-dimensional configuration");
    write_file(a.svg, svg_render(sub));
  }
  if (a.out.empty() && a.svg.empty()) std::cout << hs::serialize(hs::subdivision_to_json(sub));
  return 0;
}

struct CorankArgs {
  std::string in, out;
};

int run_corank(const CorankArgs& a) {
  const hs::Matroid m = hs::matroid_from_json(hs::parse_json(read_file(a.in)));
  const hs::Subdivision sub = hs::corank_subdivision(m);
  const std::string text = hs::serialize(hs::subdivision_to_json(sub));
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// stiefel lift / restrict, plucker-check
// ---------------------------------------------------------------------------

hs::Lifting lifting_from_subdivision_json(const hs::Json& j) {
  const hs::Subdivision s = hs::subdivision_from_json(j);
  // Only hypersimplex configurations carry a d-subset lifting.
  const int n = s.config.m;
  int d = 0;
  for (const hs::Rat& c : s.config.points[0])
    if (c == 1) ++d;
  if (!(s.config == hs::hypersimplex_configuration(d, n)))
    throw std::invalid_argument("expected a hypersimplex subdivision");
  hs::Lifting p(n, d);
  p.heights = s.heights;
  return p;
}

struct StiefelLiftArgs {
  std::string in, out;
};

int run_stiefel_lift(const StiefelLiftArgs& a) {
  const hs::ProductLifting pl =
      hs::product_lifting_from_json(hs::parse_json(read_file(a.in)));
  const hs::Lifting p = hs::stiefel_lift(pl);
  const hs::Subdivision sub =
      hs::regular_subdivision(hs::hypersimplex_configuration(p.d, p.n), p.heights);
  const std::string text = hs::serialize(hs::subdivision_to_json(sub));
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return 0;
}

struct StiefelRestrictArgs {
  std::string in, out;
  std::vector<int> base;
};

int run_stiefel_restrict(const StiefelRestrictArgs& a) {
  const hs::Lifting p = lifting_from_subdivision_json(hs::parse_json(read_file(a.in)));
  const hs::Subset base = hs::Subset::of(a.base, p.n);
  const hs::ProductLifting pl = hs::induced_product_lifting(p, base);
  const std::string text = hs::serialize(hs::product_lifting_to_json(pl));
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return 0;
}

struct PluckerArgs {
  std::string in;
};

int run_plucker_check(const PluckerArgs& a) {
  const hs::Json j = hs::parse_json(read_file(a.in));
  hs::Lifting p;
  if (j.is_object() && j.contains("bases"))
    p = hs::corank_vector(hs::matroid_from_json(j));
  else
    p = lifting_from_subdivision_json(j);
  const bool ok = hs::is_tropical_plucker(p);
  std::cout << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multi-split toolkit for hypersimplices and products of simplices"};
  app.set_version_flag("--version", hs::kToolVersion);
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "count multi-splits by the closed formula");
  count->add_flag("--hypersimplex", count_args.hypersimplex, "count splits of a hypersimplex");
  count->add_flag("--product", count_args.product, "count splits of a product of simplices");
  count->add_option("-d", count_args.d, "rank / first factor size")->required();
  count->add_option("-n", count_args.n, "ground set size (hypersimplex)");
  count->add_option("-l", count_args.l, "second factor size (product)");
  count->add_option("-k", count_args.k, "number of maximal cells")->required();
  count->add_flag("--oracle", count_args.oracle, "cross-check against brute-force enumeration");

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "write a catalog of all multi-splits");
  enumerate->add_option("-d", enum_args.d)->required();
  enumerate->add_option("-n", enum_args.n)->required();
  enumerate->add_option("-k", enum_args.k)->required();
  enumerate->add_option("--out", enum_args.out, "catalog file")->required();
  enumerate->add_option("--classes", enum_args.classes_out,
                        "also write symmetry-class representatives to this file");
  enumerate->add_flag("--allow-large", enum_args.allow_large, "lift the n <= 10 guard");

  ClassesArgs classes_args;
  CLI::App* classes = app.add_subcommand("classes", "count symmetry classes of multi-splits");
  classes->add_option("-d", classes_args.d)->required();
  classes->add_option("-n", classes_args.n)->required();
  CLI::Option* kopt = classes->add_option("-k", classes_args.k);
  classes->add_option("--out", classes_args.out, "write class representatives (requires -k)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "verify records from a JSON file");
  verify->add_option("--in", verify_args.in, "multi-split, matroid, or catalog JSON")->required();
  verify->add_flag("--cells", verify_args.cells, "cell construction routes agree");
  verify->add_flag("--exchange", verify_args.exchange, "basis exchange axiom");
  verify->add_flag("--corank", verify_args.corank, "corank subdivision reproduces the cells");
  verify->add_flag("--roundtrip", verify_args.roundtrip, "lift-restrict round trip");
  verify->add_flag("--coarseness", verify_args.coarseness, "secondary-cone linearity dimension");
  verify->add_flag("--plucker", verify_args.plucker, "tropical Pluecker relations");
  verify->add_flag("--covering", verify_args.covering, "corank cells cover all vertices");

  SubdivideArgs sub_args;
  CLI::App* subdivide = app.add_subcommand("subdivide", "regular subdivision from heights");
  subdivide->add_flag("--hypersimplex", sub_args.hypersimplex, "use hypersimplex vertices");
  subdivide->add_option("-d", sub_args.d, "hypersimplex rank");
  subdivide->add_option("-n", sub_args.n, "hypersimplex ground size");
  subdivide->add_option("--points", sub_args.points_file, "explicit point configuration file");
  subdivide->add_option("--heights", sub_args.heights_file, "heights JSON array")->required();
  subdivide->add_option("--out", sub_args.out, "subdivision JSON output");
  subdivide->add_option("--svg", sub_args.svg, "SVG plot output (2-D configurations)");

  CorankArgs corank_args;
  CLI::App* corank = app.add_subcommand("corank", "corank subdivision of a matroid");
  corank->add_option("--in", corank_args.in, "matroid JSON")->required();
  corank->add_option("--out", corank_args.out, "subdivision JSON output");

  CLI::App* stiefel = app.add_subcommand("stiefel", "tropical Stiefel map");
  stiefel->require_subcommand(1);
  StiefelLiftArgs lift_args;
  CLI::App* lift = stiefel->add_subcommand("lift", "extend a product lifting to the hypersimplex");
  lift->add_option("--in", lift_args.in, "product-lifting JSON")->required();
  lift->add_option("--out", lift_args.out, "subdivision JSON output");
  StiefelRestrictArgs restrict_args;
  CLI::App* restrict_cmd =
      stiefel->add_subcommand("restrict", "restrict a hypersimplex lifting to a base vertex");
  restrict_cmd->add_option("--in", restrict_args.in, "subdivision JSON")->required();
  restrict_cmd->add_option("--base", restrict_args.base, "base d-set elements")->required();
  restrict_cmd->add_option("--out", restrict_args.out, "product-lifting JSON output");

  PluckerArgs plucker_args;
  CLI::App* plucker = app.add_subcommand("plucker-check", "three-term Pluecker relations");
  plucker->add_option("--in", plucker_args.in, "matroid or subdivision JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (classes->parsed()) {
      classes_args.have_k = kopt->count() > 0;
      if (!classes_args.out.empty() && !classes_args.have_k)
        throw std::invalid_argument("classes: --out requires -k");
      return run_classes(classes_args);
    }
    if (verify->parsed()) return run_verify(verify_args);
    if (subdivide->parsed()) return run_subdivide(sub_args);
    if (corank->parsed()) return run_corank(corank_args);
    if (stiefel->parsed()) {
      if (lift->parsed()) return run_stiefel_lift(lift_args);
      if (restrict_cmd->parsed()) return run_stiefel_restrict(restrict_args);
    }
    if (plucker->parsed()) return run_plucker_check(plucker_args);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
