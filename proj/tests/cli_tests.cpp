// End-to-end checks of the command-line tool.  argv[1] is the path to the
// built binary; everything runs inside ./cli_tmp with captured streams.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypersplit/json_io.hpp"
#include "hypersplit/matroid.hpp"
#include "hypersplit/multisplit.hpp"
#include "hypersplit/stiefel.hpp"
#include "hypersplit/subset.hpp"

namespace hs = hypersplit;
namespace fs = std::filesystem;

#define REQUIRE(cond, msg)                                                       \
  do {                                                                           \
    if (!(cond)) {                                                               \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg << "\n"; \
      std::exit(1);                                                              \
    }                                                                            \
  } while (0)

namespace {

std::string g_binary;

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" + g_binary +
                          "\" " + args + " > cli_tmp/stdout.txt 2> cli_tmp/stderr.txt";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_text("cli_tmp/stdout.txt");
  r.err = read_text("cli_tmp/stderr.txt");
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

hs::Matroid five_basis_matroid() {
  return hs::nested_matroid(
      hs::RankedChain{4, {hs::Subset::of({1, 2}, 4), hs::Subset::full_set(4)}, {1, 2}});
}

// ---------------------------------------------------------------------------

void test_version_and_usage() {
  RunResult r = run("--version");
  REQUIRE(r.code == 0, "--version should succeed");
  REQUIRE(contains(r.out, "1.0.0"), "--version should print the tool version");

  r = run("frobnicate");
  REQUIRE(r.code == 2, "unknown subcommand should exit 2");

  r = run("count --hypersimplex -d 2");
  REQUIRE(r.code == 2, "missing required -k should exit 2");

  r = run("count --hypersimplex --product -d 2 -n 6 -l 2 -k 2");
  REQUIRE(r.code == 2, "both families at once should exit 2");

  r = run("count -d 2 -n 6 -k 2");
  REQUIRE(r.code == 2, "no family flag should exit 2");

  r = run("classes -d 2 -n 5 --out cli_tmp/x.json");
  REQUIRE(r.code == 2, "classes --out without -k should exit 2");
}

void test_count() {
  RunResult r = run("count --hypersimplex -d 2 -n 6 -k 2");
  REQUIRE(r.code == 0 && r.out == "25\n", "2-splits of the (2,6) hypersimplex");

  r = run("count --hypersimplex -d 4 -n 8 -k 4 --oracle");
  REQUIRE(r.code == 0 && r.out == "630\n", "4-splits of the (4,8) hypersimplex with oracle");

  r = run("count --product -d 2 -l 2 -k 2 --oracle");
  REQUIRE(r.code == 0 && r.out == "2\n", "2-splits of the square with oracle");

  r = run("count --product -d 3 -l 3 -k 3");
  REQUIRE(r.code == 0 && r.out == "12\n", "3-splits of the product of two triangles");

  r = run("count --hypersimplex -d 2 -n 6 -k 5");
  REQUIRE(r.code == 2, "infeasible k should exit 2");
}

void test_enumerate_verify() {
  RunResult r = run("enumerate -d 3 -n 6 -k 3 --out cli_tmp/cat363.json");
  REQUIRE(r.code == 0, "enumerate (3,6,3)");
  const std::string text = read_text("cli_tmp/cat363.json");
  hs::Catalog cat = hs::catalog_from_json(hs::parse_json(text));
  REQUIRE(cat.splits.size() == 30, "catalog should hold 30 splits");
  REQUIRE(hs::serialize(hs::catalog_to_json(cat)) == text,
          "catalog file should re-serialize byte-identically");

  r = run("verify --in cli_tmp/cat363.json");
  REQUIRE(r.code == 0, "full verification of the catalog should pass");
  REQUIRE(contains(r.out, "all checks passed"), "verify should report success");
  REQUIRE(!contains(r.out, "FAIL"), "no check may fail");

  RunResult mt = run("verify --in cli_tmp/cat363.json", "HYPERSPLIT_THREADS=3");
  REQUIRE(mt.code == 0, "multi-threaded verify should pass");
  REQUIRE(mt.out == r.out, "report must not depend on the thread count");

  r = run("enumerate -d 2 -n 4 -k 2 --out cli_tmp/cat242.json --classes cli_tmp/cls242.json");
  REQUIRE(r.code == 0, "enumerate (2,4,2) with classes");
  hs::ClassCatalog cc = hs::class_catalog_from_json(hs::parse_json(read_text("cli_tmp/cls242.json")));
  REQUIRE(cc.classes.size() == 1 && cc.classes[0].orbit_size == 3,
          "(2,4,2) has one class with orbit 3");

  r = run("enumerate -d 2 -n 11 -k 2 --out cli_tmp/too_big.json");
  REQUIRE(r.code == 2, "n = 11 without --allow-large should exit 2");
}

void test_tampered_catalog() {
  std::string text = read_text("cli_tmp/cat242.json");
  const std::string needle = "\"rank\": 1";
  const std::size_t pos = text.find(needle);
  REQUIRE(pos != std::string::npos, "catalog should contain a rank field");
  text.replace(pos, needle.size(), "\"rank\": 2");
  write_text("cli_tmp/tampered.json", text);
  RunResult r = run("verify --in cli_tmp/tampered.json");
  REQUIRE(r.code == 2, "tampered record should exit 2");
  REQUIRE(contains(r.err, "rank bound violated"), "error should name the violated rule");
}

void test_subdivide() {
  hs::Json pts;
  pts["m"] = 2;
  pts["points"] = hs::Json::array({hs::Json::array({"0", "0"}), hs::Json::array({"3", "0"}),
                                   hs::Json::array({"0", "3"}), hs::Json::array({"3", "3"}),
                                   hs::Json::array({"1", "1"})});
  write_text("cli_tmp/square5.json", hs::serialize(pts));
  write_text("cli_tmp/h_fan.json", "[\"0\", \"0\", \"0\", \"3\", \"-1\"]\n");

  RunResult r = run(
      "subdivide --points cli_tmp/square5.json --heights cli_tmp/h_fan.json "
      "--out cli_tmp/fan.json --svg cli_tmp/fan.svg");
  REQUIRE(r.code == 0, "subdivide the five-point square");
  hs::Subdivision fan = hs::subdivision_from_json(hs::parse_json(read_text("cli_tmp/fan.json")));
  REQUIRE(fan.cells.size() == 3, "heights (0,0,0,3,-1) give three cells");
  std::vector<std::vector<int>> got;
  for (const auto& c : fan.cells) got.push_back(c.points);
  REQUIRE((got == std::vector<std::vector<int>>{{0, 1, 4}, {0, 2, 4}, {1, 2, 3, 4}}),
          "fan cells");
  const std::string svg = read_text("cli_tmp/fan.svg");
  REQUIRE(svg.rfind("<svg", 0) == 0, "SVG file should start with an <svg tag");
  REQUIRE(contains(svg, "<polygon"), "SVG should draw cells");

  write_text("cli_tmp/h_corank.json", "[\"1\", \"0\", \"0\", \"0\", \"0\", \"0\"]\n");
  r = run(
      "subdivide --hypersimplex -d 2 -n 4 --heights cli_tmp/h_corank.json "
      "--out cli_tmp/octa_split.json");
  REQUIRE(r.code == 0, "subdivide the octahedron by corank heights");
  hs::Subdivision octa =
      hs::subdivision_from_json(hs::parse_json(read_text("cli_tmp/octa_split.json")));
  REQUIRE(octa.cells.size() == 2, "raising one vertex splits the octahedron in two");

  write_text("cli_tmp/h_zero.json", "[\"0\", \"0\", \"0\", \"0\", \"0\", \"0\"]\n");
  r = run("subdivide --hypersimplex -d 2 -n 4 --heights cli_tmp/h_zero.json");
  REQUIRE(r.code == 0, "trivial subdivision to stdout");
  hs::Subdivision triv = hs::subdivision_from_json(hs::parse_json(r.out));
  REQUIRE(triv.cells.size() == 1 && triv.cells[0].points.size() == 6,
          "zero heights leave a single cell");

  r = run("subdivide --hypersimplex -d 2 -n 4 --heights cli_tmp/h_zero.json --svg cli_tmp/x.svg");
  REQUIRE(r.code == 2, "--svg on a non-planar configuration should exit 2");

  write_text("cli_tmp/h_short.json", "[\"0\", \"0\"]\n");
  r = run("subdivide --hypersimplex -d 2 -n 4 --heights cli_tmp/h_short.json");
  REQUIRE(r.code == 2, "wrong height count should exit 2");
}

void test_corank_and_stiefel() {
  write_text("cli_tmp/m5.json", hs::serialize(hs::matroid_to_json(five_basis_matroid())));
  RunResult r = run("corank --in cli_tmp/m5.json --out cli_tmp/corank5.json");
  REQUIRE(r.code == 0, "corank subdivision of the five-basis matroid");
  REQUIRE(read_text("cli_tmp/corank5.json") == read_text("cli_tmp/octa_split.json"),
          "corank route and height route must produce identical files");

  hs::ProductLifting pl(4, hs::Subset::of({1, 3}, 4));
  pl.at(3, 2) = 1;
  write_text("cli_tmp/pl.json", hs::serialize(hs::product_lifting_to_json(pl)));
  r = run("stiefel lift --in cli_tmp/pl.json --out cli_tmp/lifted.json");
  REQUIRE(r.code == 0, "stiefel lift");
  REQUIRE(read_text("cli_tmp/lifted.json") == read_text("cli_tmp/corank5.json"),
          "lifting the induced table must reproduce the corank subdivision");

  r = run("stiefel restrict --in cli_tmp/corank5.json --base 1 3 --out cli_tmp/restricted.json");
  REQUIRE(r.code == 0, "stiefel restrict");
  REQUIRE(read_text("cli_tmp/restricted.json") == hs::serialize(hs::product_lifting_to_json(pl)),
          "restriction must recover the product lifting");

  r = run("stiefel restrict --in cli_tmp/corank5.json --base 3 4");
  REQUIRE(r.code == 0, "restricting to another basis succeeds");
  hs::ProductLifting flat = hs::product_lifting_from_json(hs::parse_json(r.out));
  for (const hs::Rat& x : flat.lambda)
    REQUIRE(x == 0, "all single swaps around {3,4} sit at height zero");

  r = run("plucker-check --in cli_tmp/m5.json");
  REQUIRE(r.code == 0 && r.out == "pass\n", "corank heights satisfy the three-term relations");

  r = run("plucker-check --in cli_tmp/corank5.json");
  REQUIRE(r.code == 0 && r.out == "pass\n", "subdivision input works too");
}

void test_classes() {
  RunResult r = run("classes -d 3 -n 6");
  REQUIRE(r.code == 0, "classes -d 3 -n 6");
  REQUIRE(r.out == "k=2: 2\nk=3: 1\ntotal: 3\n", "class counts per k");

  r = run("classes -d 2 -n 4 -k 2 --out cli_tmp/cls.json");
  REQUIRE(r.code == 0 && r.out == "1\n", "single class for (2,4,2)");
  hs::ClassCatalog cc = hs::class_catalog_from_json(hs::parse_json(read_text("cli_tmp/cls.json")));
  REQUIRE(cc.classes.size() == 1 && cc.classes[0].orbit_size == 3, "orbit of size 3");
}

void test_io_failures() {
  RunResult r = run("verify --in cli_tmp/does_not_exist.json");
  REQUIRE(r.code == 4, "missing input file should exit 4");

  r = run("enumerate -d 2 -n 5 -k 2 --out /nonexistent_dir_hypersplit/cat.json");
  REQUIRE(r.code == 4, "unwritable output should exit 4");

  write_text("cli_tmp/garbage.json", "{ not json");
  r = run("verify --in cli_tmp/garbage.json");
  REQUIRE(r.code == 2, "unparseable input should exit 2");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-hypersplit-binary>\n";
    return 2;
  }
  g_binary = fs::absolute(argv[1]).string();
  std::error_code ec;
  fs::remove_all("cli_tmp", ec);
  fs::create_directories("cli_tmp");

  test_version_and_usage();
  test_count();
  test_enumerate_verify();
  test_tampered_catalog();
  test_subdivide();
  test_corank_and_stiefel();
  test_classes();
  test_io_failures();

  std::cout << "cli_tests: all checks passed\n";
  return 0;
}
