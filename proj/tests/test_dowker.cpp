#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dowker/dowker.hpp"

using namespace dowker;

namespace {

// Nonempty subsets of {1..nverts} that lie in the complex given by facets,
// as a poset category under inclusion.
struct ComplexPoset {
  CatPtr cat;
  std::vector<std::set<int>> faces;
};

ComplexPoset subset_poset(int nverts, const std::vector<std::set<int>>& facets) {
  std::set<std::set<int>> faces;
  for (const auto& f : facets) {
    std::vector<int> v(f.begin(), f.end());
    for (unsigned mask = 1; mask < (1u << v.size()); ++mask) {
      std::set<int> s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask >> i & 1) s.insert(v[i]);
      faces.insert(s);
    }
  }
  ComplexPoset out;
  out.faces.assign(faces.begin(), faces.end());
  std::vector<std::string> names;
  for (const auto& s : out.faces) {
    std::string n = "{";
    for (int x : s) n += std::to_string(x);
    names.push_back(n + "}");
  }
  (void)nverts;
  auto leq = [faces = out.faces](int a, int b) {
    return std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                         faces[a].end());
  };
  out.cat = poset_category(names, leq);
  return out;
}

// Vertex membership relation into V x K for the given complex.
CatRelation vertex_membership_relation(int nverts,
                                       const std::vector<std::set<int>>& facets,
                                       bool ordered_vertices) {
  ComplexPoset k = subset_poset(nverts, facets);
  std::vector<std::string> vnames;
  for (int v = 1; v <= nverts; ++v) vnames.push_back(std::to_string(v));
  CatPtr vcat = ordered_vertices
                    ? poset_category(vnames, [](int a, int b) { return a <= b; })
                    : translation_category(vnames);
  auto member = [faces = k.faces](obj_t v, obj_t s) {
    return faces[s].count(v + 1) > 0;
  };
  return full_subproduct_relation(vcat, k.cat, member);
}

// Grid count oracle for thin totals: grids are determined by their object
// matrices, so enumerate those directly and validate.
long count_rectangles_thin(const CatRelation& rel, int m, int n) {
  const FinCategory& t = *rel.total;
  const int cells = (m + 1) * (n + 1);
  std::vector<int> v(cells, 0);
  long count = 0;
  while (true) {
    RectangleSimplex g;
    g.m = m;
    g.n = n;
    g.obj.assign(v.begin(), v.end());
    g.hmor.resize(m * (n + 1));
    g.vmor.resize((m + 1) * n);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j <= n && ok; ++j) {
        auto h = t.hom(g.at(i, j), g.at(i + 1, j));
        if (h.size() != 1)
          ok = false;
        else
          g.hmor[i * (n + 1) + j] = h[0];
      }
    for (int i = 0; i <= m && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        auto h = t.hom(g.at(i, j), g.at(i, j + 1));
        if (h.size() != 1)
          ok = false;
        else
          g.vmor[i * n + j] = h[0];
      }
    if (ok && is_valid_rectangle(rel, g)) ++count;
    int k = cells - 1;
    while (k >= 0 && v[k] == t.object_count() - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return count;
}

// Two parallel arrows over the single arrow of the interval; the total
// category is not thin, so lifts are not determined by their objects.
CatRelation parallel_arrow_relation() {
  std::vector<std::string> objs = {"a", "b"};
  std::vector<FinCategory::Mor> mors = {
      {"ida", 0, 0}, {"idb", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  std::vector<mor_t> ids = {0, 1};
  std::vector<int32_t> comp(16, -1);
  auto at = [&](mor_t x, mor_t y) -> int32_t& { return comp[x * 4 + y]; };
  at(0, 0) = 0;
  at(1, 1) = 1;
  at(2, 0) = 2;
  at(1, 2) = 2;
  at(3, 0) = 3;
  at(1, 3) = 3;
  CatPtr total = std::make_shared<FinCategory>(objs, mors, ids, comp);
  CatPtr o1 = ordinal(1);
  CatPtr o0 = ordinal(0);
  mor_t arrow = hom_unique(*o1, 0, 1);
  Functor left = make_functor(total, o1, {0, 1},
                              {o1->identity(0), o1->identity(1), arrow, arrow});
  Functor right = make_functor(
      total, o0, {0, 0},
      {o0->identity(0), o0->identity(0), o0->identity(0), o0->identity(0)});
  return make_relation(total, std::move(left), std::move(right));
}

// Definition-level oracle for arbitrary totals: every object and morphism
// assignment is tried against the membership conditions.
long count_rectangles_bruteforce(const CatRelation& rel, int m, int n) {
  const FinCategory& t = *rel.total;
  const int cells = (m + 1) * (n + 1);
  const int hslots = m * (n + 1);
  const int vslots = (m + 1) * n;
  long count = 0;
  std::vector<int> obj(cells, 0);
  while (true) {
    std::vector<int> mor(hslots + vslots, 0);
    while (true) {
      RectangleSimplex g;
      g.m = m;
      g.n = n;
      g.obj.assign(obj.begin(), obj.end());
      g.hmor.assign(mor.begin(), mor.begin() + hslots);
      g.vmor.assign(mor.begin() + hslots, mor.end());
      if (is_valid_rectangle(rel, g)) ++count;
      int k = hslots + vslots - 1;
      while (k >= 0 && mor[k] == t.morphism_count() - 1) mor[k--] = 0;
      if (k < 0) break;
      ++mor[k];
    }
    int k = cells - 1;
    while (k >= 0 && obj[k] == t.object_count() - 1) obj[k--] = 0;
    if (k < 0) break;
    ++obj[k];
  }
  return count;
}

CatRelation two_point_fiber_relation() {
  // x related to both of y1, y2, with no morphisms anywhere.
  CatPtr x = poset_category({"x"}, [](int, int) { return true; });
  CatPtr y = poset_category({"y1", "y2"}, [](int a, int b) { return a == b; });
  return full_subproduct_relation(x, y, [](obj_t, obj_t) { return true; });
}

}  // namespace

TEST_CASE("rectangle nerve bottom corner") {
  CatRelation r = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
  RectangleNerve er = RectangleNerve::build(r, 2, 2);
  er.bis().validate();

  // (0,0)-simplices are the objects of the total category.
  CHECK(er.count(0, 0) == r.total->object_count());

  // (1,0)-simplices are the arrows whose right component is an identity.
  int expected = 0;
  for (mor_t m = 0; m < r.total->morphism_count(); ++m)
    if (r.right.cod->is_identity(r.right.on_morphism(m))) ++expected;
  CHECK(er.count(1, 0) == expected);

  // every enumerated grid passes the membership oracle
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int i = 0; i < er.count(m, n); ++i)
        CHECK(is_valid_rectangle(r, er.grid(m, n, i)));
}

TEST_CASE("rectangle counts match the thin-category oracle") {
  // Full triangle, ordered vertices.
  CatRelation r1 = vertex_membership_relation(3, {{1, 2, 3}}, true);
  RectangleNerve er = RectangleNerve::build(r1, 1, 1);
  long oracle = count_rectangles_thin(r1, 1, 1);
  CHECK(er.count(1, 1) == oracle);
  CHECK(oracle == 36);  // 3 vertex chains with 9 lifts each, 3 edges with 3
  CHECK(er.count(0, 1) == count_rectangles_thin(r1, 0, 1));
  CHECK(er.count(1, 0) == count_rectangles_thin(r1, 1, 0));
}

TEST_CASE("relations with parallel lifts") {
  CatRelation r = parallel_arrow_relation();
  RectangleNerve er = RectangleNerve::build(r, 1, 1);
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n)
      CHECK(er.count(m, n) == count_rectangles_bruteforce(r, m, n));

  // the projected nerve is the full interval
  CHECK(dowker_nerve(r, 2) == nerve(ordinal(1), 2));

  // but the two parallel lifts make the fiber over the arrow disconnected
  DowkerBounds bounds;
  bounds.max_chain_length = 1;
  bounds.fiber_truncation = 2;
  DowkerVerdict v = check_dowker(r, DowkerStrategy::acyclic, bounds);
  CHECK(v.status == DowkerStatus::not_dowker);
  REQUIRE(v.witness.has_value());
  CHECK(v.reports[*v.witness].chain_length == 1);
}

TEST_CASE("dowker nerve of the identity relation is the standard simplex") {
  for (int n = 0; n <= 3; ++n) {
    IdentityRelation idr = identity_relation(ordinal(n), ordinal(0));
    SimplicialSet dr = dowker_nerve(idr.rel, 3);
    CHECK(dr == nerve(ordinal(n), 3));
    // bottom row of the rectangle nerve counts the order-preserving maps
    RectangleNerve er = RectangleNerve::build(idr.rel, 3, 0);
    for (int m = 0; m <= 3; ++m)
      CHECK(er.count(m, 0) ==
            static_cast<int>(enumerate_m_chains(*ordinal(n), m).size()));
  }
}

TEST_CASE("diagonal degeneracy via the grid test") {
  for (const CatRelation& r :
       {vertex_membership_relation(3, {{1, 2, 3}}, true),
        vertex_membership_relation(3, {{1, 2}, {2, 3}}, false)}) {
    RectangleNerve er = RectangleNerve::build(r, 2, 2);
    SimplicialSet diag = diagonal(er.bis());
    for (int n = 1; n <= 2; ++n)
      for (int i = 0; i < diag.size(n); ++i) {
        bool grid_test = false;
        for (int k = 0; k < n; ++k)
          grid_test =
              grid_test || diagonal_degenerate_at(*r.total, er.grid(n, n, i), k);
        CHECK(grid_test == diag.is_degenerate(n, i));
      }
  }
}

TEST_CASE("dowker nerve of the empty relation is empty") {
  CatPtr empty = poset_category({}, [](int, int) { return true; });
  CatPtr o1 = ordinal(1);
  Functor to1 = make_functor(empty, o1, {}, {});
  CatRelation r = make_relation(empty, to1, to1);
  SimplicialSet dr = dowker_nerve(r, 2);
  for (int n = 0; n <= 2; ++n) CHECK(dr.size(n) == 0);
}

TEST_CASE("projection surjects onto the Dowker nerve") {
  CatRelation r = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
  RectangleNerve er = RectangleNerve::build(r, 2, 0);
  SimplicialSet dr = dowker_nerve(r, 2);
  for (int m = 0; m <= 2; ++m) {
    std::set<std::string> seen;
    for (int i = 0; i < er.count(m, 0); ++i)
      seen.insert(er.left_chain(m, 0, i).label());
    CHECK(static_cast<int>(seen.size()) == dr.size(m));
    for (int i = 0; i < dr.size(m); ++i) CHECK(seen.count(dr.label(m, i)) == 1);
  }
}

TEST_CASE("diagonal projection") {
  SUBCASE("isomorphism for the identity relation on the interval") {
    IdentityRelation idr = identity_relation(ordinal(1), ordinal(0));
    RectangleNerve er = RectangleNerve::build(idr.rel, 2, 2);
    SimplicialSet dr = dowker_nerve(idr.rel, 2);
    SimplicialMap dpi = diagonal_projection(er, dr);
    CHECK(is_simplicial_iso(dpi));
  }
  SUBCASE("validated map for a membership relation") {
    CatRelation r = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
    RectangleNerve er = RectangleNerve::build(r, 2, 2);
    SimplicialSet dr = dowker_nerve(r, 2);
    CHECK_NOTHROW(diagonal_projection(er, dr));
  }
}

TEST_CASE("grid transposition onto the transpose nerve") {
  CatRelation r = vertex_membership_relation(3, {{1, 2, 3}}, true);
  RectangleNerve er = RectangleNerve::build(r, 2, 2);
  RectangleNerve ert = RectangleNerve::build(transpose(r), 2, 2);

  RectangleTranspose tw = rectangle_transpose_iso(er, ert);
  CHECK(tw.bijective);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(er.count(m, n) == ert.count(n, m));

  // double transposition is the identity on grids
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int i = 0; i < er.count(m, n); ++i)
        CHECK(transpose_grid(transpose_grid(er.grid(m, n, i))) ==
              er.grid(m, n, i));

  // diagonal comparison map validates
  CHECK_NOTHROW(diagonal_transpose_iso(er, ert));
}

TEST_CASE("fibers") {
  CatRelation r1 = vertex_membership_relation(3, {{1, 2, 3}}, true);

  SUBCASE("fiber of a constant chain is the nerve of the star") {
    Chain a{0, {}};  // vertex 1
    SimplicialSet f = fiber(r1, a, 2);
    // simplices containing vertex 1: {1},{12},{13},{123} — a poset with an
    // initial object, so the nerve is contractible
    std::vector<obj_t> star;
    for (obj_t o = 0; o < r1.right.cod->object_count(); ++o)
      if (r1.total->object_index("(1," + r1.right.cod->object_name(o) + ")") >=
          0)
        star.push_back(o);
    Subcategory sub = full_subcategory(r1.right.cod, star);
    SimplicialSet ns = nerve(sub.cat, 2);
    for (int n = 0; n <= 2; ++n) CHECK(f.size(n) == ns.size(n));
    auto h = homology(f, {0, 1}, /*reduced=*/true);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 0);
  }

  SUBCASE("fiber sizes match the fiber category nerve for all short chains") {
    DowkerNerveData dr = build_dowker_nerve(r1, 2);
    for (int m = 0; m <= 2; ++m)
      for (const Chain& a : dr.chains[m]) {
        SimplicialSet f = fiber(r1, a, 2);
        // objects of the fiber category: d with (a(i), d) in the total
        std::vector<obj_t> keep;
        for (obj_t dobj = 0; dobj < r1.right.cod->object_count(); ++dobj) {
          bool ok = true;
          for (int i = 0; i <= m && ok; ++i) {
            obj_t v = chain_object(*r1.left.cod, a, i);
            ok = r1.total->object_index(
                     "(" + r1.left.cod->object_name(v) + "," +
                     r1.right.cod->object_name(dobj) + ")") >= 0;
          }
          if (ok) keep.push_back(dobj);
        }
        SimplicialSet ns = nerve(full_subcategory(r1.right.cod, keep).cat, 2);
        for (int n = 0; n <= 2; ++n) CHECK(f.size(n) == ns.size(n));
      }
  }

  SUBCASE("functor-valued chains give the same fiber") {
    const FinCategory& v = *r1.left.cod;
    Chain a{0, {hom_unique(v, 0, 1)}};
    SimplicialSet from_chain = fiber(r1, a, 2);
    SimplicialSet from_functor = fiber(r1, chain_to_functor(r1.left.cod, a), 2);
    CHECK(from_chain == from_functor);
  }

  SUBCASE("chains with equal image have equal fiber sizes") {
    const FinCategory& v = *r1.left.cod;
    Chain a{0, {hom_unique(v, 0, 1)}};            // 1 <= 2
    Chain b{0, {v.identity(0), hom_unique(v, 0, 1)}};  // 1 = 1 <= 2
    SimplicialSet fa = fiber(r1, a, 2);
    SimplicialSet fb = fiber(r1, b, 2);
    for (int n = 0; n <= 2; ++n) CHECK(fa.size(n) == fb.size(n));
  }

  SUBCASE("empty fiber for a chain with no lift") {
    CatRelation r = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
    const FinCategory& v = *r.left.cod;
    // 1 <= 3 is a chain of the vertex order whose image {1,3} is not a face
    Chain a{0, {hom_unique(v, 0, 2)}};
    SimplicialSet f = fiber(r, a, 2);
    for (int n = 0; n <= 2; ++n) CHECK(f.size(n) == 0);
  }
}

TEST_CASE("fibers decompose the rectangle nerve") {
  CatRelation r1 = vertex_membership_relation(3, {{1, 2, 3}}, true);
  RectangleNerve er = RectangleNerve::build(r1, 2, 2);
  DowkerNerveData dr = build_dowker_nerve(r1, 2);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      std::set<std::string> all;
      for (const Chain& a : dr.chains[m]) {
        SimplicialSet f = fiber(r1, a, n);
        for (int i = 0; i < f.size(n); ++i) {
          CHECK(all.insert(f.label(n, i)).second);  // disjointness
          CHECK(er.bis().index_of(m, n, f.label(n, i)) >= 0);
        }
      }
      CHECK(static_cast<int>(all.size()) == er.count(m, n));
    }
}

TEST_CASE("projection naturality for a morphism of relations") {
  // Inclusion of complexes {12},{23} into the full triangle, with the
  // identity on vertices.
  CatRelation small = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
  CatRelation big = vertex_membership_relation(3, {{1, 2, 3}}, true);
  // object/morphism maps of the face poset inclusion
  const FinCategory& ksmall = *small.right.cod;
  const FinCategory& kbig = *big.right.cod;
  std::vector<obj_t> om(ksmall.object_count());
  for (obj_t o = 0; o < ksmall.object_count(); ++o) {
    om[o] = kbig.object_index(ksmall.object_name(o));
    REQUIRE(om[o] >= 0);
  }
  std::vector<mor_t> mm(ksmall.morphism_count());
  for (mor_t m = 0; m < ksmall.morphism_count(); ++m)
    mm[m] = hom_unique(kbig, om[ksmall.source(m)], om[ksmall.target(m)]);
  Functor f2 = make_functor(small.right.cod, big.right.cod, om, mm);
  // totals: the subproduct objects embed likewise
  const FinCategory& tsmall = *small.total;
  const FinCategory& tbig = *big.total;
  std::vector<obj_t> tom(tsmall.object_count());
  for (obj_t o = 0; o < tsmall.object_count(); ++o) {
    tom[o] = tbig.object_index(tsmall.object_name(o));
    REQUIRE(tom[o] >= 0);
  }
  std::vector<mor_t> tmm(tsmall.morphism_count());
  for (mor_t m = 0; m < tsmall.morphism_count(); ++m)
    tmm[m] = hom_unique(tbig, tom[tsmall.source(m)], tom[tsmall.target(m)]);
  Functor f0 = make_functor(small.total, big.total, tom, tmm);
  RelMorphism f = make_rel_morphism(f0, identity_functor(small.left.cod), f2,
                                    small, big);

  RectangleNerve er_small = RectangleNerve::build(small, 2, 2);
  RectangleNerve er_big = RectangleNerve::build(big, 2, 2);
  CHECK(projection_naturality_holds(f, er_small, er_big));

  // diagonal square: Df . d(pi) = d(pi') . d(Ef)
  SimplicialSet dr_small = dowker_nerve(small, 2);
  SimplicialSet dr_big = dowker_nerve(big, 2);
  SimplicialMap df = dowker_nerve_map(f, dr_small, dr_big);
  SimplicialMap def = diagonal_rectangle_map(f, er_small, er_big);
  SimplicialMap lhs = compose_simplicial_maps(df, diagonal_projection(er_small, dr_small));
  SimplicialMap rhs = compose_simplicial_maps(diagonal_projection(er_big, dr_big), def);
  CHECK(simplicial_maps_equal(lhs, rhs));
}

TEST_CASE("dowker relation checker") {
  DowkerBounds bounds;
  bounds.max_chain_length = 2;
  bounds.fiber_truncation = 2;

  SUBCASE("membership relations of a complex are certified") {
    CatRelation r2 = vertex_membership_relation(3, {{1, 2}, {2, 3}}, false);
    DowkerVerdict v = check_dowker(r2, DowkerStrategy::initial_terminal, bounds);
    CHECK(v.status == DowkerStatus::certified_dowker);

    CatRelation r1t = transpose(vertex_membership_relation(3, {{1, 2}, {2, 3}}, true));
    DowkerVerdict vt = check_dowker(r1t, DowkerStrategy::initial_terminal, bounds);
    CHECK(vt.status == DowkerStatus::certified_dowker);
  }

  SUBCASE("acyclic evidence on a certified relation") {
    CatRelation r1 = vertex_membership_relation(3, {{1, 2}, {2, 3}}, true);
    DowkerVerdict v = check_dowker(r1, DowkerStrategy::acyclic, bounds);
    CHECK(v.status == DowkerStatus::acyclic_evidence);
    for (const FiberReport& rep : v.reports) CHECK(rep.ok);
  }

  SUBCASE("a two-point discrete fiber is refuted") {
    CatRelation r = two_point_fiber_relation();
    DowkerVerdict v = check_dowker(r, DowkerStrategy::acyclic, bounds);
    CHECK(v.status == DowkerStatus::not_dowker);
    REQUIRE(v.witness.has_value());
    CHECK(v.reports[*v.witness].reduced_betti[0] == 1);

    DowkerVerdict cert =
        check_dowker(r, DowkerStrategy::initial_terminal, bounds);
    CHECK(cert.status == DowkerStatus::inconclusive);

    DowkerVerdict both = check_dowker(r, DowkerStrategy::both, bounds);
    CHECK(both.status == DowkerStatus::not_dowker);
  }

  SUBCASE("certificate does not apply to collapsed relations") {
    CatPtr o1 = ordinal(1);
    CatPtr o0 = ordinal(0);
    Functor collapse = make_functor(
        o1, o0, {0, 0},
        {o0->identity(0), o0->identity(0), o0->identity(0)});
    CatRelation r = make_relation(o1, collapse, collapse);
    DowkerVerdict cert =
        check_dowker(r, DowkerStrategy::initial_terminal, bounds);
    CHECK(cert.status == DowkerStatus::inconclusive);
    // the fibers are nerves of [1], so the evidence pass accepts them
    DowkerVerdict both = check_dowker(r, DowkerStrategy::both, bounds);
    CHECK(both.status == DowkerStatus::acyclic_evidence);
  }
}
