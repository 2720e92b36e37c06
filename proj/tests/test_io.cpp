#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dowker/io.hpp"

using namespace dowker;

namespace {

CatPtr reparse(const FinCategory& c) {
  std::istringstream in(dump_category(c));
  return parse_category(in, "dump");
}

}  // namespace

TEST_CASE("category files round-trip") {
  CHECK(*reparse(*ordinal(2)) == *ordinal(2));
  CHECK(*reparse(*translation_category({"v", "w", "u"})) ==
        *translation_category({"v", "w", "u"}));
  CatRelation r = set_relation_translation(make_set_relation(
      {"1", "2"}, {"a"}, {{0, 0}, {1, 0}}));
  CHECK(*reparse(*r.total) == *r.total);
}

TEST_CASE("category parse errors carry line numbers") {
  std::istringstream in("object a\nobject a\n");
  CHECK_THROWS_WITH_AS(parse_category(in, "f"),
                       doctest::Contains("f:2: duplicate object"), parse_error);

  std::istringstream in2("object a\nidentity ida a\nmorphism g a b\n");
  CHECK_THROWS_WITH_AS(parse_category(in2, "f"),
                       doctest::Contains("unknown object b"), parse_error);

  // a composable pair with no entry is named in the error
  std::istringstream in3(
      "object a\nidentity ida a\nmorphism f a a\ncompose f f f\n"
      "morphism g a a\ncompose g g g\ncompose f g f\n");
  CHECK_THROWS_WITH_AS(parse_category(in3, "f"),
                       doctest::Contains("(g, f)"), parse_error);
}

TEST_CASE("relation files round-trip") {
  CatRelation r = relation_r1(
      make_complex({"1", "2", "3"}, {{0, 1}, {1, 2}}), {0, 1, 2});
  std::istringstream in(dump_relation(r));
  CatRelation s = parse_relation(in, "dump");
  CHECK(relation_equal(r, s));
}

TEST_CASE("relation files need all sections") {
  std::istringstream in("[category total]\nobject a\nidentity i a\n");
  CHECK_THROWS_WITH_AS(parse_relation(in, "f"),
                       doctest::Contains("missing section"), parse_error);
}

TEST_CASE("complex files round-trip") {
  SimplicialComplex k = make_complex({"1", "2", "3"}, {{0, 1}, {1, 2}});
  SUBCASE("with an order") {
    std::istringstream in(dump_complex(k, std::vector<int>{2, 0, 1}));
    ComplexFile f = parse_complex(in, "dump");
    CHECK(f.complex.simplices == k.simplices);
    REQUIRE(f.order.has_value());
    CHECK(*f.order == std::vector<int>{2, 0, 1});
  }
  SUBCASE("without an order") {
    std::istringstream in(dump_complex(k, std::nullopt));
    ComplexFile f = parse_complex(in, "dump");
    CHECK(!f.order.has_value());
    CHECK(f.complex.vertices == k.vertices);
  }
  SUBCASE("bad order is rejected") {
    std::istringstream in("vertex a\nvertex b\norder a\nfacet a b\n");
    CHECK_THROWS_WITH_AS(parse_complex(in, "f"),
                         doctest::Contains("order must list every vertex"),
                         parse_error);
  }
}

TEST_CASE("pair files round-trip") {
  SetRelation r = make_set_relation({"1", "2", "3"}, {"a", "b"},
                                    {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  std::istringstream in(dump_pairs(r));
  SetRelation s = parse_pairs(in, "dump");
  CHECK(s.xs == r.xs);
  CHECK(s.ys == r.ys);
  CHECK(s.pairs == r.pairs);
}

TEST_CASE("simplicial set dumps round-trip") {
  SimplicialSet s = nerve(translation_category({"v", "w"}), 2);
  SimplicialSet t = sset_from_json(sset_to_json(s));
  CHECK(t == s);
}

TEST_CASE("homology reports serialize torsion exactly") {
  HomologyGroup g;
  g.degree = 1;
  g.betti = 2;
  g.torsion = {Int(2), Int(6)};
  auto j = homology_to_json({g}, 1, false);
  CHECK(j["groups"][0]["torsion"][1] == "6");
}

TEST_CASE("sparse triplet export") {
  IntMatrix m(2, 3);
  m.at(0, 1) = -2;
  m.at(1, 2) = 5;
  CHECK(matrix_to_triplets(m) == "2 3\n0 1 -2\n1 2 5\n");
}
