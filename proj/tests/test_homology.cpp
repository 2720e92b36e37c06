#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "dowker/homology.hpp"

using namespace dowker;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  return m;
}

// Free complex of the hollow triangle: e01 -> v1 - v0 etc.
ChainComplex circle_complex(int maxdeg = 1) {
  ChainComplex c;
  c.maxdeg = maxdeg;
  c.basis.resize(maxdeg + 2);
  c.boundary.resize(maxdeg + 2);
  c.basis[0] = {"v0", "v1", "v2"};
  c.basis[1] = {"e01", "e02", "e12"};
  c.boundary[0] = IntMatrix(0, 3);
  c.boundary[1] = from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}, 3);
  for (int n = 2; n <= maxdeg + 1; ++n) c.boundary[n] = IntMatrix(c.dim(n - 1), 0);
  c.verify_dd_zero();
  return c;
}

ChainComplex point_complex(int maxdeg = 1) {
  ChainComplex c;
  c.maxdeg = maxdeg;
  c.basis.resize(maxdeg + 2);
  c.boundary.resize(maxdeg + 2);
  c.basis[0] = {"pt"};
  c.boundary[0] = IntMatrix(0, 1);
  for (int n = 1; n <= maxdeg + 1; ++n) c.boundary[n] = IntMatrix(c.dim(n - 1), 0);
  return c;
}

void check_smith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(s.u.mul(s.uinv) == IntMatrix::identity(a.rows));
  CHECK(s.v.mul(s.vinv) == IntMatrix::identity(a.cols));
  CHECK(s.u.mul(a).mul(s.v) == s.d);
  CHECK(s.uinv.mul(s.d).mul(s.vinv) == a);
  for (int i = 0; i + 1 < static_cast<int>(s.invariant_factors.size()); ++i)
    CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  for (int i = 0; i < s.d.rows; ++i)
    for (int j = 0; j < s.d.cols; ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

int nerve_components(const FinCategory& c) {
  std::vector<int> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (mor_t m = 0; m < c.morphism_count(); ++m)
    parent[find(c.source(m))] = find(c.target(m));
  int components = 0;
  for (int x = 0; x < c.object_count(); ++x)
    if (find(x) == x) ++components;
  return components;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SUBCASE("zero matrix") {
    SmithForm s = smith_normal_form(IntMatrix(2, 3));
    CHECK(s.rank == 0);
    CHECK(s.invariant_factors.empty());
  }
  SUBCASE("diag(2,3) has invariant factors 1, 6") {
    SmithForm s = smith_normal_form(from_rows({{2, 0}, {0, 3}}, 2));
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 1);
    CHECK(s.invariant_factors[1] == 6);
    check_smith(from_rows({{2, 0}, {0, 3}}, 2));
  }
  SUBCASE("identity") {
    SmithForm s = smith_normal_form(IntMatrix::identity(4));
    CHECK(s.rank == 4);
    for (const Int& f : s.invariant_factors) CHECK(f == 1);
  }
  SUBCASE("empty shapes") {
    check_smith(IntMatrix(0, 3));
    check_smith(IntMatrix(3, 0));
    check_smith(IntMatrix(0, 0));
  }
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(97531);
  std::uniform_int_distribution<int> dim(0, 6), entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (Int& x : a.a) x = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("normalized chain complexes") {
  SUBCASE("standard simplices") {
    for (int n = 0; n <= 2; ++n) {
      SimplicialSet d = nerve(ordinal(n), 3);
      ChainComplex c = normalized_chain_complex(d, 2);
      auto h = homology(c, {0, 1, 2});
      CHECK(h[0].betti == 1);
      CHECK(h[1].betti == 0);
      CHECK(h[2].betti == 0);
      for (const auto& g : h) CHECK(g.torsion.empty());
    }
  }
  SUBCASE("translation nerve has bases 2,2,2") {
    SimplicialSet s = nerve(translation_category({"v", "w"}), 3);
    ChainComplex c = normalized_chain_complex(s, 2);
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(1) == 2);
    CHECK(c.dim(2) == 2);
    CHECK(c.dim(3) == 2);
  }
  SUBCASE("insufficient truncation is an error") {
    SimplicialSet d = nerve(ordinal(1), 2);
    CHECK_THROWS_AS(normalized_chain_complex(d, 2), validation_error);
  }
}

TEST_CASE("homology of the barycentric circle") {
  // Nerve of the poset of proper faces of a triangle: a circle.
  std::vector<std::vector<int>> faces = {{0},    {1},    {2},
                                         {0, 1}, {0, 2}, {1, 2}};
  auto leq = [&](int a, int b) {
    return std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                         faces[a].end());
  };
  CatPtr p = poset_category({"0", "1", "2", "01", "02", "12"}, leq);
  SimplicialSet s = nerve(p, 2);
  auto h = homology(s, {0, 1});
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].torsion.empty());

  auto hr = homology(s, {0, 1}, /*reduced=*/true);
  CHECK(hr[0].betti == 0);
  CHECK(hr[1].betti == 1);
}

TEST_CASE("homology is independent of basis order") {
  std::mt19937 rng(311);
  ChainComplex c = circle_complex();
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> p0 = {0, 1, 2}, p1 = {0, 1, 2};
    std::shuffle(p0.begin(), p0.end(), rng);
    std::shuffle(p1.begin(), p1.end(), rng);
    ChainComplex s = c;
    for (int i = 0; i < 3; ++i) {
      s.basis[0][p0[i]] = c.basis[0][i];
      s.basis[1][p1[i]] = c.basis[1][i];
      for (int j = 0; j < 3; ++j) s.boundary[1].at(p0[i], p1[j]) = c.boundary[1].at(i, j);
    }
    auto h = homology(s, {0, 1});
    CHECK(h[0].betti == 1);
    CHECK(h[1].betti == 1);
  }
}

TEST_CASE("degree-zero betti equals component count of the nerve") {
  std::mt19937 rng(8642);
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<int> nd(1, 5), coin(0, 2);
    int n = nd(rng);
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      leq[i][i] = 1;
      for (int j = i + 1; j < n; ++j) leq[i][j] = coin(rng) == 0;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    CatPtr p = poset_category(names,
                              [leq](int a, int b) { return leq[a][b] == 1; });
    SimplicialSet s = nerve(p, 2);
    auto h = homology(s, {0});
    CHECK(h[0].betti == nerve_components(*p));
  }
}

TEST_CASE("induced chain maps") {
  SUBCASE("identity") {
    SimplicialSet d = nerve(ordinal(1), 2);
    ChainMap f = induced_chain_map(identity_simplicial_map(d), 1);
    for (int n = 0; n <= 2; ++n)
      CHECK(f.mat[n] == IntMatrix::identity(f.source.dim(n)));
  }
  SUBCASE("collapse of the interval to the point") {
    CatPtr o1 = ordinal(1);
    CatPtr o0 = ordinal(0);
    Functor collapse = make_functor(
        o1, o0, {0, 0},
        {o0->identity(0), o0->identity(0), o0->identity(0)});
    ChainMap f = induced_chain_map(nerve_map(collapse, 2), 1);
    CHECK(f.mat[0] == from_rows({{1, 1}}, 2));
    CHECK(f.mat[1].is_zero());
  }
}

TEST_CASE("quasi-isomorphism certification") {
  SUBCASE("identity is certified") {
    ChainComplex c = circle_complex();
    QuasiIsoVerdict v = is_quasi_iso(identity_chain_map(c), 1);
    CHECK(v.certified);
  }
  SUBCASE("zero map from a point to a circle is rejected") {
    ChainMap f;
    f.source = point_complex();
    f.target = circle_complex();
    f.mat.resize(3);
    f.mat[0] = IntMatrix(3, 1);
    f.mat[1] = IntMatrix(3, 0);
    f.mat[2] = IntMatrix(0, 0);
    f.validate();
    QuasiIsoVerdict v = is_quasi_iso(f, 1);
    CHECK(!v.certified);
    CHECK(v.cone_homology[1].betti > 0);
  }
  SUBCASE("collapse of a circle to a point is rejected at the top degree") {
    ChainMap f;
    f.source = circle_complex();
    f.target = point_complex();
    f.mat.resize(3);
    f.mat[0] = from_rows({{1, 1, 1}}, 3);
    f.mat[1] = IntMatrix(0, 3);
    f.mat[2] = IntMatrix(0, 0);
    f.validate();
    QuasiIsoVerdict v = is_quasi_iso(f, 1);
    // The cone is acyclic through degree 1, so only the top-degree group
    // comparison can (and must) reject this map.
    CHECK(v.cone_homology[0].betti == 0);
    CHECK(v.cone_homology[1].betti == 0);
    CHECK(!v.certified);
  }
}

TEST_CASE("induced maps on homology") {
  SUBCASE("equal maps") {
    ChainComplex c = circle_complex();
    ChainMap id = identity_chain_map(c);
    CHECK(homology_maps_equal(id, id, 1));
  }
  SUBCASE("distinct image components differ") {
    // Two points mapping to a two-point target in different ways.
    ChainComplex two;
    two.maxdeg = 0;
    two.basis = {{"a", "b"}, {}};
    two.boundary = {IntMatrix(0, 2), IntMatrix(2, 0)};
    ChainComplex one;
    one.maxdeg = 0;
    one.basis = {{"x"}, {}};
    one.boundary = {IntMatrix(0, 1), IntMatrix(1, 0)};
    ChainMap f{one, two, {from_rows({{1}, {0}}, 1), IntMatrix(0, 0)}};
    ChainMap g{one, two, {from_rows({{0}, {1}}, 1), IntMatrix(0, 0)}};
    f.validate();
    g.validate();
    CHECK(!homology_maps_equal(f, g, 0));
    CHECK(homology_maps_equal(f, f, 0));
  }
  SUBCASE("torsion classes compare modulo the invariant factor") {
    // C_1 = Z --(2)--> C_0 = Z gives H_0 = Z/2, where +1 and -1 agree.
    ChainComplex c;
    c.maxdeg = 0;
    c.basis = {{"e"}, {"f"}};
    c.boundary = {IntMatrix(0, 1), from_rows({{2}}, 1)};
    ChainMap plus{c, c, {IntMatrix::identity(1), IntMatrix::identity(1)}};
    IntMatrix neg(1, 1);
    neg.at(0, 0) = -1;
    ChainMap minus{c, c, {neg, neg}};
    ChainMap zero{c, c, {IntMatrix(1, 1), IntMatrix(1, 1)}};
    plus.validate();
    minus.validate();
    zero.validate();
    CHECK(homology_maps_equal(plus, minus, 0));
    CHECK(!homology_maps_equal(plus, zero, 0));
  }
}
