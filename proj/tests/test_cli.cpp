#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dowker/cli.hpp"

namespace {

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"dowker"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return dowker::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string tmp_path(const std::string& name) {
  return "cli_test_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("nerve command reports the chain counts") {
  std::string cat = tmp_path("ord2.cat");
  std::string out = tmp_path("ord2.json");
  REQUIRE(run_cli({"gen", "ordinal", "2", "--out", cat}) == 0);
  REQUIRE(run_cli({"nerve", cat, "--max-dim", "2", "--format", "json", "--out",
                   out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["dimensions"][0]["simplices"].size() == 3);
  CHECK(j["dimensions"][1]["simplices"].size() == 6);
  CHECK(j["dimensions"][2]["simplices"].size() == 10);
  std::remove(cat.c_str());
  std::remove(out.c_str());
}

TEST_CASE("empty category files dump empty nerves") {
  std::string cat = tmp_path("empty.cat");
  std::string out = tmp_path("empty.json");
  write_file(cat, "# no objects\n");
  REQUIRE(run_cli({"nerve", cat, "--max-dim", "2", "--format", "json", "--out",
                   out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  for (int n = 0; n <= 2; ++n)
    CHECK(j["dimensions"][n]["simplices"].empty());
  std::remove(cat.c_str());
  std::remove(out.c_str());
}

TEST_CASE("machine output is deterministic") {
  std::string cplx = tmp_path("bd2.cplx");
  std::string out1 = tmp_path("a.json");
  std::string out2 = tmp_path("b.json");
  REQUIRE(run_cli({"gen", "complex", "boundary", "2", "--out", cplx}) == 0);
  REQUIRE(run_cli({"sing", cplx, "--max-dim", "2", "--homology", "1",
                   "--format", "json", "--out", out1}) == 0);
  REQUIRE(run_cli({"sing", cplx, "--max-dim", "2", "--homology", "1",
                   "--format", "json", "--out", out2}) == 0);
  CHECK(slurp(out1) == slurp(out2));
  std::remove(cplx.c_str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("generated dumps reload") {
  std::string rel = tmp_path("idrel.rel");
  std::string out = tmp_path("dr.json");
  REQUIRE(run_cli({"gen", "relation", "identity-ordinal", "2", "--out", rel}) ==
          0);
  REQUIRE(run_cli({"dowker", rel, "--max-dim", "2", "--format", "json",
                   "--out", out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["dimensions"][2]["simplices"].size() == 10);
  std::remove(rel.c_str());
  std::remove(out.c_str());
}

TEST_CASE("exit codes") {
  SUBCASE("invalid composition tables exit 2 and name the pair") {
    std::string cat = tmp_path("bad.cat");
    write_file(cat,
               "object a\nidentity ida a\nmorphism f a a\nmorphism g a a\n"
               "compose f f f\ncompose g g g\ncompose f g f\n");
    CHECK(run_cli({"nerve", cat}) == 2);
    std::remove(cat.c_str());
  }
  SUBCASE("not-dowker relations exit 1") {
    std::string rel = tmp_path("nd.rel");
    REQUIRE(run_cli({"gen", "relation", "not-dowker", "--out", rel}) == 0);
    CHECK(run_cli({"dowker", rel, "--check", "--strategy", "acyclic", "--out",
                   tmp_path("nd.out")}) == 1);
    std::remove(rel.c_str());
    std::remove(tmp_path("nd.out").c_str());
  }
  SUBCASE("ordered sing without a declared order exits 2") {
    std::string cplx = tmp_path("noorder.cplx");
    write_file(cplx, "vertex v\nfacet v\n");
    CHECK(run_cli({"sing", cplx, "--ordered", "--out", tmp_path("x.out")}) ==
          2);
    std::remove(cplx.c_str());
  }
  SUBCASE("insufficient truncation for homology exits 3") {
    std::string cplx = tmp_path("edge.cplx");
    REQUIRE(run_cli({"gen", "complex", "edge", "--out", cplx}) == 0);
    CHECK(run_cli({"sing", cplx, "--max-dim", "1", "--homology", "1"}) == 3);
    std::remove(cplx.c_str());
  }
}

TEST_CASE("duality verification on the hollow triangle") {
  std::string cplx = tmp_path("bd2b.cplx");
  std::string rel = tmp_path("r1.rel");
  std::string out = tmp_path("duality.json");
  REQUIRE(run_cli({"gen", "complex", "boundary", "2", "--out", cplx}) == 0);
  REQUIRE(run_cli({"gen", "relation", "r1", cplx, "--out", rel}) == 0);
  REQUIRE(run_cli({"dowker", rel, "--verify-duality", "--max-deg", "1",
                   "--format", "json", "--out", out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["all_certified"] == true);
  CHECK(j["transpose_bijection"] == true);
  CHECK(j["maps"].size() == 4);
  CHECK(j["dowker_nerve_homology"]["groups"][1]["betti"] == 1);
  std::remove(cplx.c_str());
  std::remove(rel.c_str());
  std::remove(out.c_str());
}

TEST_CASE("classic dowker duality report") {
  std::string pairs = tmp_path("ex.pairs");
  std::string out = tmp_path("classic.json");
  REQUIRE(run_cli({"gen", "pairs", "--out", pairs}) == 0);
  REQUIRE(run_cli({"classic-dowker", pairs, "--max-deg", "2", "--format",
                   "json", "--out", out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["equal"] == true);
  CHECK(j["relation_homology"]["groups"][0]["betti"] == 1);
  std::remove(pairs.c_str());
  std::remove(out.c_str());
}

TEST_CASE("homology command sniffs the input kind") {
  std::string cat = tmp_path("t2.cat");
  std::string out = tmp_path("t2hom.json");
  REQUIRE(run_cli({"gen", "translation", "2", "--out", cat}) == 0);
  REQUIRE(run_cli({"homology", cat, "--max-deg", "1", "--format", "json",
                   "--out", out}) == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["groups"][0]["betti"] == 1);
  CHECK(j["groups"][1]["betti"] == 0);
  std::remove(cat.c_str());
  std::remove(out.c_str());
}
