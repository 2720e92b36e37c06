#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "dowker/fincat.hpp"

using namespace dowker;

namespace {

// Independent count of order-preserving maps [m] -> P for a poset given by
// leq, by direct enumeration of value tuples.
long count_monotone_maps(int m, int n, const std::function<bool(int, int)>& leq) {
  std::vector<int> v(m + 1, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = leq(v[i], v[i + 1]);
    if (ok) ++count;
    int k = m;
    while (k >= 0 && v[k] == n - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return count;
}

// Number of length-m paths in the composable-arrow multigraph, via powers of
// the hom-count matrix.
long count_paths(const FinCategory& c, int m) {
  int n = c.object_count();
  std::vector<long> a(n * n, 0), acc(n * n, 0);
  for (mor_t f = 0; f < c.morphism_count(); ++f) a[c.source(f) * n + c.target(f)]++;
  for (int i = 0; i < n; ++i) acc[i * n + i] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<long> next(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) next[i * n + j] += acc[i * n + k] * a[k * n + j];
    acc = std::move(next);
  }
  long total = 0;
  for (long x : acc) total += x;
  return total;
}

}  // namespace

TEST_CASE("ordinal categories") {
  CatPtr o0 = ordinal(0);
  CHECK(o0->object_count() == 1);
  CHECK(o0->morphism_count() == 1);

  CatPtr o2 = ordinal(2);
  CHECK(o2->object_count() == 3);
  CHECK(o2->morphism_count() == 6);

  CatPtr o1 = ordinal(1);
  CHECK(o1->hom(0, 1).size() == 1);
  CHECK(o1->hom(1, 0).size() == 0);
  o1->validate();
  o2->validate();
}

TEST_CASE("poset category of the faces of an edge") {
  // {1}, {2}, {1,2} under inclusion: pairs s <= t counted directly.
  std::vector<std::set<int>> faces = {{1}, {2}, {1, 2}};
  auto leq = [&](int a, int b) {
    return std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                         faces[a].end());
  };
  int expected = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (leq(a, b)) ++expected;
  CHECK(expected == 5);
  CatPtr k = poset_category({"{1}", "{2}", "{1,2}"}, leq);
  CHECK(k->object_count() == 3);
  CHECK(k->morphism_count() == expected);
}

TEST_CASE("poset category rejects non-orders") {
  auto not_reflexive = [](int, int) { return false; };
  CHECK_THROWS_AS(poset_category({"a"}, not_reflexive), validation_error);
  auto not_antisym = [](int, int) { return true; };
  CHECK_THROWS_AS(poset_category({"a", "b"}, not_antisym), validation_error);
  auto not_trans = [](int a, int b) {
    return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
  };
  CHECK_THROWS_AS(poset_category({"a", "b", "c"}, not_trans), validation_error);
}

TEST_CASE("two-element antichain") {
  auto leq = [](int a, int b) { return a == b; };
  CatPtr c = poset_category({"a", "b"}, leq);
  CHECK(c->object_count() == 2);
  CHECK(c->morphism_count() == 2);
}

TEST_CASE("translation categories") {
  CatPtr t1 = translation_category({"v"});
  CHECK(t1->object_count() == 1);
  CHECK(t1->morphism_count() == 1);

  CatPtr t2 = translation_category({"v", "w"});
  CHECK(t2->object_count() == 2);
  CHECK(t2->morphism_count() == 4);
  t2->validate();

  CatPtr t3 = translation_category({"1", "2", "3"});
  CHECK(t3->morphism_count() == 9);
  for (obj_t x = 0; x < 3; ++x)
    for (obj_t y = 0; y < 3; ++y) CHECK(t3->hom(x, y).size() == 1);
}

TEST_CASE("product categories") {
  ProductCategory p = product_category(ordinal(1), ordinal(1));
  CHECK(p.cat->object_count() == 4);
  CHECK(p.cat->morphism_count() == 9);
  p.cat->validate();

  // C x [0] is isomorphic to C via the first projection.
  ProductCategory q = product_category(ordinal(2), ordinal(0));
  CHECK(is_isomorphism(q.proj1));

  // Chains [1] -> [1]x[2] against the independent monotone-map count.
  ProductCategory r = product_category(ordinal(1), ordinal(2));
  auto leq = [&](int a, int b) {
    auto [a1, a2] = r.object_parts(a);
    auto [b1, b2] = r.object_parts(b);
    return a1 <= b1 && a2 <= b2;
  };
  long expected = count_monotone_maps(1, r.cat->object_count(), leq);
  CHECK(expected == 18);
  CHECK(enumerate_chains(r.cat, 1).size() == static_cast<std::size_t>(expected));

  // Projections jointly reflect equality of morphisms.
  for (mor_t m1 = 0; m1 < r.cat->morphism_count(); ++m1)
    for (mor_t m2 = 0; m2 < r.cat->morphism_count(); ++m2) {
      bool same_parts = r.proj1.on_morphism(m1) == r.proj1.on_morphism(m2) &&
                        r.proj2.on_morphism(m1) == r.proj2.on_morphism(m2);
      CHECK(same_parts == (m1 == m2));
    }
}

TEST_CASE("comma categories") {
  CatPtr o0 = ordinal(0);
  CatPtr o1 = ordinal(1);

  SUBCASE("identity over the point") {
    Functor id0 = identity_functor(o0);
    CommaCategory c = comma_category(id0, id0);
    CHECK(c.cat->object_count() == 1);
    CHECK(c.cat->morphism_count() == 1);
  }

  SUBCASE("F picks 0 in [1], G = id") {
    Functor f = make_functor(o0, o1, {0}, {o1->identity(0)});
    Functor g = identity_functor(o1);
    CommaCategory c = comma_category(f, g);
    CHECK(c.cat->object_count() == 2);
    int non_identity = 0;
    for (mor_t m = 0; m < c.cat->morphism_count(); ++m)
      if (!c.cat->is_identity(m)) ++non_identity;
    CHECK(non_identity == 1);
  }

  SUBCASE("F = id, G picks 0 in [1]") {
    Functor f = identity_functor(o1);
    Functor g = make_functor(o0, o1, {0}, {o1->identity(0)});
    CommaCategory c = comma_category(f, g);
    CHECK(c.cat->object_count() == 1);
  }

  SUBCASE("object count equals the sum of hom sizes") {
    CatPtr o2 = ordinal(2);
    Functor f = make_functor(o1, o2, {0, 2},
                             {o2->identity(0), hom_unique(*o2, 0, 2),
                              o2->identity(2)});
    Functor g = identity_functor(o2);
    CommaCategory c = comma_category(f, g);
    std::size_t expected = 0;
    for (obj_t x = 0; x < o1->object_count(); ++x)
      for (obj_t y = 0; y < o2->object_count(); ++y)
        expected += o2->hom(f.on_object(x), y).size();
    CHECK(c.cat->object_count() == static_cast<int>(expected));
    c.cat->validate();
  }
}

TEST_CASE("chain enumeration") {
  CHECK(enumerate_chains(ordinal(1), 1).size() == 3);
  CHECK(enumerate_chains(translation_category({"v", "w"}), 2).size() == 8);

  CatPtr o2 = ordinal(2);
  CHECK(enumerate_chains(o2, 0).size() ==
        static_cast<std::size_t>(o2->object_count()));

  // Cardinality equals the number of length-m paths in the arrow graph.
  for (int m = 0; m <= 3; ++m) {
    CHECK(enumerate_m_chains(*o2, m).size() ==
          static_cast<std::size_t>(count_paths(*o2, m)));
    CatPtr t3 = translation_category({"a", "b", "c"});
    CHECK(enumerate_m_chains(*t3, m).size() ==
          static_cast<std::size_t>(count_paths(*t3, m)));
  }
}

TEST_CASE("chain faces and degeneracies") {
  CatPtr o2 = ordinal(2);
  Chain ch{0, {hom_unique(*o2, 0, 1), hom_unique(*o2, 1, 2)}};
  CHECK(chain_face(*o2, ch, 0) == Chain{1, {hom_unique(*o2, 1, 2)}});
  CHECK(chain_face(*o2, ch, 2) == Chain{0, {hom_unique(*o2, 0, 1)}});
  CHECK(chain_face(*o2, ch, 1) == Chain{0, {hom_unique(*o2, 0, 2)}});
  Chain s0 = chain_degeneracy(*o2, ch, 0);
  CHECK(s0.arrows.size() == 3);
  CHECK(o2->is_identity(s0.arrows[0]));
  CHECK(chain_has_identity_arrow(*o2, s0));
  CHECK(!chain_has_identity_arrow(*o2, ch));
}

TEST_CASE("chains convert to functors and back") {
  CatPtr t2 = translation_category({"v", "w"});
  for (const Chain& ch : enumerate_m_chains(*t2, 2)) {
    Functor f = chain_to_functor(t2, ch);
    CHECK(functor_chain(f) == ch);
  }
}

TEST_CASE("full subcategories") {
  CatPtr t3 = translation_category({"1", "2", "3"});

  SUBCASE("all objects gives an isomorphic copy") {
    Subcategory s = full_subcategory(t3, {0, 1, 2});
    CHECK(is_isomorphism(s.inclusion));
  }
  SUBCASE("empty subcategory") {
    Subcategory s = full_subcategory(t3, {});
    CHECK(s.cat->object_count() == 0);
    CHECK(s.cat->morphism_count() == 0);
  }
  SUBCASE("two objects of a translation category") {
    Subcategory s = full_subcategory(t3, {0, 1});
    CHECK(s.cat->object_count() == 2);
    CHECK(s.cat->morphism_count() == 4);
    s.cat->validate();
  }
}

TEST_CASE("validation rejects broken composition tables") {
  // Two objects, one arrow between them, with a corrupted unit entry.
  std::vector<std::string> objs = {"a", "b"};
  std::vector<FinCategory::Mor> mors = {{"ida", 0, 0}, {"idb", 1, 1}, {"f", 0, 1}};
  std::vector<mor_t> ids = {0, 1};
  std::vector<int32_t> comp(9, -1);
  auto at = [&](mor_t g, mor_t f) -> int32_t& { return comp[g * 3 + f]; };
  at(0, 0) = 0;
  at(1, 1) = 1;
  at(2, 0) = 2;
  at(1, 2) = 2;
  CHECK_NOTHROW(FinCategory(objs, mors, ids, comp));
  at(1, 2) = 1;  // idb . f = idb: wrong endpoints
  CHECK_THROWS_AS(FinCategory(objs, mors, ids, comp), validation_error);
  at(1, 2) = -1;  // missing entry on a composable pair
  CHECK_THROWS_WITH_AS(FinCategory(objs, mors, ids, comp),
                       doctest::Contains("(idb, f)"), validation_error);
}

TEST_CASE("functor validation") {
  CatPtr o1 = ordinal(1);
  CatPtr o2 = ordinal(2);
  // 0 -> 0, 1 -> 2 forces the arrow to go to the composite 0 -> 2.
  std::vector<mor_t> mm = {o2->identity(0), hom_unique(*o2, 0, 2),
                           o2->identity(2)};
  CHECK_NOTHROW(make_functor(o1, o2, {0, 2}, mm));
  mm[1] = hom_unique(*o2, 0, 1);  // wrong target
  CHECK_THROWS_AS(make_functor(o1, o2, {0, 2}, mm), validation_error);
}

TEST_CASE("the morphism limit is enforced and adjustable") {
  std::size_t saved = morphism_limit();
  morphism_limit() = 8;
  CHECK_THROWS_WITH_AS(translation_category({"a", "b", "c"}),
                       doctest::Contains("morphism cap"), validation_error);
  morphism_limit() = saved;
  CHECK_NOTHROW(translation_category({"a", "b", "c"}));
}

TEST_CASE("initial and terminal objects") {
  CHECK(find_initial_object(*ordinal(2)) == 0);
  CHECK(find_terminal_object(*ordinal(2)) == 2);
  CatPtr t2 = translation_category({"v", "w"});
  CHECK(find_initial_object(*t2).has_value());
  CHECK(find_terminal_object(*t2).has_value());
  auto leq = [](int a, int b) { return a == b; };
  CatPtr anti = poset_category({"a", "b"}, leq);
  CHECK(!find_initial_object(*anti).has_value());
  CHECK(!find_terminal_object(*anti).has_value());
}
