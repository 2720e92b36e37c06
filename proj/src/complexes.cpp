#include "dowker/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dowker {

bool SimplicialComplex::contains(const std::vector<int>& s) const {
  return std::binary_search(
      simplices.begin(), simplices.end(), s,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::string SimplicialComplex::simplex_name(const std::vector<int>& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += vertices[s[i]];
  }
  return out + "}";
}

SimplicialComplex make_complex(std::vector<std::string> vertices,
                               const std::vector<std::vector<int>>& facets) {
  SimplicialComplex k;
  k.vertices = std::move(vertices);
  std::set<std::vector<int>> faces;
  for (const std::vector<int>& f : facets) {
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
      if (v < 0 || v >= static_cast<int>(k.vertices.size()))
        throw validation_error("facet vertex index out of range");
    const std::size_t n = sorted.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(sorted[i]);
      faces.insert(std::move(s));
    }
  }
  k.simplices.assign(faces.begin(), faces.end());
  std::sort(k.simplices.begin(), k.simplices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return k;
}

SetRelation make_set_relation(std::vector<std::string> xs,
                              std::vector<std::string> ys,
                              std::vector<std::pair<int, int>> pairs) {
  for (const auto& [x, y] : pairs)
    if (x < 0 || x >= static_cast<int>(xs.size()) || y < 0 ||
        y >= static_cast<int>(ys.size()))
      throw validation_error("relation pair out of range");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return SetRelation{std::move(xs), std::move(ys), std::move(pairs)};
}

SetRelation transpose(const SetRelation& r) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [x, y] : r.pairs) pairs.emplace_back(y, x);
  return make_set_relation(r.ys, r.xs, std::move(pairs));
}

SimplicialComplex dowker_complex(const SetRelation& r) {
  std::vector<std::vector<int>> facets;
  for (std::size_t y = 0; y < r.ys.size(); ++y) {
    std::vector<int> facet;
    for (const auto& [px, py] : r.pairs)
      if (py == static_cast<int>(y)) facet.push_back(px);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  return make_complex(r.xs, facets);
}

ChainComplex ordered_simplex_chain_complex(const SimplicialComplex& k,
                                           int maxdeg) {
  ChainComplex c;
  c.maxdeg = maxdeg;
  c.basis.resize(maxdeg + 2);
  c.boundary.resize(maxdeg + 2);
  std::vector<std::map<std::vector<int>, int>> pos(maxdeg + 2);
  for (const std::vector<int>& s : k.simplices) {
    int n = static_cast<int>(s.size()) - 1;
    if (n > maxdeg + 1) continue;
    pos[n].emplace(s, static_cast<int>(c.basis[n].size()));
    c.basis[n].push_back(k.simplex_name(s));
  }
  c.boundary[0] = IntMatrix(0, c.dim(0));
  for (int n = 1; n <= maxdeg + 1; ++n) {
    IntMatrix b(c.dim(n - 1), c.dim(n));
    for (const auto& [s, j] : pos[n]) {
      for (int i = 0; i <= n; ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + i);
        b.at(pos[n - 1].at(face), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary[n] = std::move(b);
  }
  c.verify_dd_zero();
  return c;
}

std::vector<HomologyGroup> complex_homology(const SimplicialComplex& k,
                                            const std::vector<int>& degrees,
                                            bool reduced) {
  int maxdeg = 0;
  for (int d : degrees) maxdeg = std::max(maxdeg, d);
  return homology(ordered_simplex_chain_complex(k, maxdeg), degrees, reduced);
}

namespace {

// Chains of a thin category on the vertex set whose image spans a simplex.
SimplicialSet spanning_chain_sset(const SimplicialComplex& k, const CatPtr& vcat,
                                  int truncation) {
  std::vector<std::vector<Chain>> chains(truncation + 1);
  std::vector<int> seq;
  std::vector<mor_t> arrows;
  std::function<void(int)> dfs = [&](int depth) {
    {
      std::vector<int> image = seq;
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!k.contains(image)) return;
    }
    Chain c{seq.front(), arrows};
    chains[depth].push_back(c);
    if (depth == truncation) return;
    for (obj_t next = 0; next < vcat->object_count(); ++next) {
      std::vector<mor_t> h = vcat->hom(seq.back(), next);
      if (h.size() != 1) continue;
      seq.push_back(next);
      arrows.push_back(h[0]);
      dfs(depth + 1);
      arrows.pop_back();
      seq.pop_back();
    }
  };
  for (obj_t v = 0; v < vcat->object_count(); ++v) {
    seq.assign(1, v);
    dfs(0);
  }
  SimplicialSetBuilder b(truncation);
  for (int n = 0; n <= truncation; ++n)
    for (const Chain& c : chains[n]) b.add_simplex(n, c.label());
  for (int n = 0; n <= truncation; ++n)
    for (std::size_t i = 0; i < chains[n].size(); ++i) {
      const Chain& c = chains[n][i];
      for (int t = 0; n >= 1 && t <= n; ++t)
        b.set_face(n, static_cast<int>(i), t, chain_face(*vcat, c, t).label());
      if (n + 1 <= truncation)
        for (int t = 0; t <= n; ++t)
          b.set_degeneracy(n, static_cast<int>(i), t,
                           chain_degeneracy(*vcat, c, t).label());
    }
  return std::move(b).build();
}

CatPtr vertex_poset(const SimplicialComplex& k, const std::vector<int>& order) {
  const int n = static_cast<int>(k.vertices.size());
  if (static_cast<int>(order.size()) != n)
    throw validation_error("vertex order must list every vertex exactly once");
  std::vector<int> rank(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || rank[order[i]] >= 0)
      throw validation_error("vertex order must list every vertex exactly once");
    rank[order[i]] = i;
  }
  return poset_category(k.vertices,
                        [rank](int a, int b) { return rank[a] <= rank[b]; });
}

std::function<bool(obj_t, obj_t)> membership(const SimplicialComplex& k) {
  return [&k](obj_t v, obj_t s) {
    const std::vector<int>& simplex = k.simplices[s];
    return std::binary_search(simplex.begin(), simplex.end(), v);
  };
}

CatPtr simplex_poset(const SimplicialComplex& k) {
  std::vector<std::string> names;
  for (const std::vector<int>& s : k.simplices) names.push_back(k.simplex_name(s));
  auto leq = [sims = k.simplices](int a, int b) {
    return std::includes(sims[b].begin(), sims[b].end(), sims[a].begin(),
                         sims[a].end());
  };
  return poset_category(names, leq);
}

}  // namespace

SimplicialSet sing(const SimplicialComplex& k, int truncation) {
  return spanning_chain_sset(k, translation_category(k.vertices), truncation);
}

SimplicialSet sing_ordered(const SimplicialComplex& k,
                           const std::vector<int>& order, int truncation) {
  return spanning_chain_sset(k, vertex_poset(k, order), truncation);
}

obj_t find_total_object(const CatRelation& rel, obj_t left_o, obj_t right_o) {
  for (obj_t x = 0; x < rel.total->object_count(); ++x)
    if (rel.left.on_object(x) == left_o && rel.right.on_object(x) == right_o)
      return x;
  throw validation_error("no total object with the requested components");
}

mor_t find_total_morphism(const CatRelation& rel, obj_t src, obj_t tgt,
                          mor_t left_m, mor_t right_m) {
  mor_t found = -1;
  for (mor_t m : rel.total->hom(src, tgt))
    if (rel.left.on_morphism(m) == left_m &&
        rel.right.on_morphism(m) == right_m) {
      if (found >= 0)
        throw validation_error("total morphism components are ambiguous");
      found = m;
    }
  if (found < 0)
    throw validation_error("no total morphism with the requested components");
  return found;
}

ComplexRelations complex_relations(const SimplicialComplex& k,
                                   const std::vector<int>& order) {
  ComplexRelations out;
  out.complex = k;
  out.vposet = vertex_poset(k, order);
  out.vtrans = translation_category(k.vertices);
  out.kposet = simplex_poset(k);
  out.vprod = product_category(out.vtrans, out.vposet);
  auto member = membership(out.complex);
  out.r1 = full_subproduct_relation(out.vposet, out.kposet, member);
  out.r2 = full_subproduct_relation(out.vtrans, out.kposet, member);
  const ProductCategory& vp = out.vprod;
  out.r0 = full_subproduct_relation(
      vp.cat, out.kposet, [&member, &vp](obj_t pair, obj_t s) {
        auto [v, w] = vp.object_parts(pair);
        return member(v, s) && member(w, s);
      });

  auto component_map = [](const CatRelation& src, const CatRelation& tgt,
                          const Functor& on_left,
                          const Functor& on_right) -> Functor {
    std::vector<obj_t> om(src.total->object_count());
    for (obj_t x = 0; x < src.total->object_count(); ++x)
      om[x] = find_total_object(tgt, on_left.on_object(src.left.on_object(x)),
                                on_right.on_object(src.right.on_object(x)));
    std::vector<mor_t> mm(src.total->morphism_count());
    for (mor_t m = 0; m < src.total->morphism_count(); ++m)
      mm[m] = find_total_morphism(
          tgt, om[src.total->source(m)], om[src.total->target(m)],
          on_left.on_morphism(src.left.on_morphism(m)),
          on_right.on_morphism(src.right.on_morphism(m)));
    return make_functor(src.total, tgt.total, std::move(om), std::move(mm));
  };

  Functor idk = identity_functor(out.kposet);
  out.r0_to_r1 = make_rel_morphism(component_map(out.r0, out.r1, vp.proj2, idk),
                                   vp.proj2, idk, out.r0, out.r1);
  out.r0_to_r2 = make_rel_morphism(component_map(out.r0, out.r2, vp.proj1, idk),
                                   vp.proj1, idk, out.r0, out.r2);
  // ordered vertices include into the translation category
  std::vector<obj_t> om(out.vposet->object_count());
  std::vector<mor_t> mm(out.vposet->morphism_count());
  for (obj_t o = 0; o < out.vposet->object_count(); ++o) om[o] = o;
  for (mor_t m = 0; m < out.vposet->morphism_count(); ++m)
    mm[m] = hom_unique(*out.vtrans, out.vposet->source(m),
                       out.vposet->target(m));
  Functor include_v = make_functor(out.vposet, out.vtrans, std::move(om),
                                   std::move(mm));
  out.r1_into_r2 = make_rel_morphism(
      component_map(out.r1, out.r2, include_v, idk), include_v, idk, out.r1,
      out.r2);
  return out;
}

CatRelation relation_r1(const SimplicialComplex& k,
                        const std::vector<int>& order) {
  return full_subproduct_relation(vertex_poset(k, order), simplex_poset(k),
                                  membership(k));
}

CatRelation relation_r2(const SimplicialComplex& k) {
  return full_subproduct_relation(translation_category(k.vertices),
                                  simplex_poset(k), membership(k));
}

CatRelation relation_r0(const SimplicialComplex& k,
                        const std::vector<int>& order) {
  ProductCategory vp =
      product_category(translation_category(k.vertices), vertex_poset(k, order));
  auto member = membership(k);
  return full_subproduct_relation(
      vp.cat, simplex_poset(k), [member, vp](obj_t pair, obj_t s) {
        auto [v, w] = vp.object_parts(pair);
        return member(v, s) && member(w, s);
      });
}

CatRelation comma_relation(const Functor& f, const Functor& g) {
  CommaCategory cc = comma_category(f, g);
  return CatRelation{cc.cat, cc.proj_left, cc.proj_right};
}

namespace {

// d^i : identity relation on [0]x[0] -> identity relation on [1]x[0]; the
// total and left maps avoid index i.
RelMorphism interval_end(const IdentityRelation& pt, const IdentityRelation& seg,
                         int i) {
  CatPtr o0 = pt.prod.factor1;
  CatPtr o1 = seg.prod.factor1;
  obj_t hit = 1 - i;
  Functor f1 = make_functor(o0, o1, {hit}, {o1->identity(hit)});
  Functor f0 = make_functor(
      pt.rel.total, seg.rel.total, {seg.prod.object_of(hit, 0)},
      {seg.prod.morphism_of(o1->identity(hit),
                            pt.prod.factor2->identity(0))});
  return make_rel_morphism(std::move(f0), std::move(f1),
                           identity_functor(pt.rel.right.cod), pt.rel, seg.rel);
}

// The canonical isomorphism r -> (identity on [0]x[0]) x r.
RelMorphism point_cylinder_iso(const CatRelation& r, const ProductRelation& ptr) {
  auto embed = [](const CatPtr& cat, const ProductCategory& prod) -> Functor {
    const FinCategory& unit = *prod.factor1;
    std::vector<obj_t> om(cat->object_count());
    std::vector<mor_t> mm(cat->morphism_count());
    for (obj_t o = 0; o < cat->object_count(); ++o)
      om[o] = prod.object_of(0, o);
    for (mor_t m = 0; m < cat->morphism_count(); ++m)
      mm[m] = prod.morphism_of(unit.identity(0), m);
    return make_functor(cat, prod.cat, std::move(om), std::move(mm));
  };
  return make_rel_morphism(embed(r.total, ptr.total_prod),
                           embed(r.left.cod, ptr.left_prod),
                           embed(r.right.cod, ptr.right_prod), r, ptr.rel);
}

}  // namespace

bool check_transformation(const RelMorphism& h, const RelMorphism& f0,
                          const RelMorphism& f1) {
  if (!relation_equal(f0.source, f1.source) ||
      !relation_equal(f0.target, f1.target) ||
      !relation_equal(h.target, f0.target))
    throw validation_error("transformation endpoints do not match");
  const CatRelation& r = f0.source;
  IdentityRelation pt = identity_relation(ordinal(0), ordinal(0));
  IdentityRelation seg = identity_relation(ordinal(1), ordinal(0));
  ProductRelation cyl = product_relation(seg.rel, r);
  if (!relation_equal(h.source, cyl.rel))
    throw validation_error(
        "transformation source must be the interval cylinder over the "
        "common source");
  ProductRelation ptr = product_relation(pt.rel, r);
  RelMorphism iso = point_cylinder_iso(r, ptr);
  for (int i = 0; i <= 1; ++i) {
    RelMorphism di = interval_end(pt, seg, i);
    RelMorphism end =
        product_rel_morphism(di, identity_rel_morphism(r), ptr, cyl);
    RelMorphism restricted = compose_rel_morphisms(
        h, compose_rel_morphisms(end, iso));
    const RelMorphism& expected = i == 0 ? f0 : f1;
    if (!functor_equal(restricted.f0, expected.f0) ||
        !functor_equal(restricted.f1, expected.f1) ||
        !functor_equal(restricted.f2, expected.f2))
      return false;
  }
  return true;
}

TransformationData r0_homotopy(const ComplexRelations& rels) {
  TransformationData out;
  IdentityRelation seg = identity_relation(ordinal(1), ordinal(0));
  out.cylinder = product_relation(seg.rel, rels.r0);
  out.top = rels.r0_to_r2;
  out.bottom = compose_rel_morphisms(rels.r1_into_r2, rels.r0_to_r1);

  const ProductRelation& cyl = out.cylinder;
  const CatRelation& r2 = rels.r2;
  const FinCategory& vtrans = *rels.vtrans;

  // f1: interval x (vertex pairs) -> translation category, picking the
  // first vertex at interval time 0 and the second at time 1.
  const ProductCategory& lp = cyl.left_prod;
  auto pick = [&](obj_t o) {
    auto [time, pair] = lp.object_parts(o);
    auto [v, w] = rels.vprod.object_parts(pair);
    return time == 0 ? v : w;
  };
  std::vector<obj_t> f1o(lp.cat->object_count());
  std::vector<mor_t> f1m(lp.cat->morphism_count());
  for (obj_t o = 0; o < lp.cat->object_count(); ++o) f1o[o] = pick(o);
  for (mor_t m = 0; m < lp.cat->morphism_count(); ++m)
    f1m[m] = hom_unique(vtrans, f1o[lp.cat->source(m)],
                        f1o[lp.cat->target(m)]);
  Functor f1 = make_functor(lp.cat, rels.vtrans, std::move(f1o),
                            std::move(f1m));

  // f2: [0] x simplices -> simplices.
  Functor f2 = cyl.right_prod.proj2;

  // f0 on totals, forced by the components.
  const FinCategory& tot = *cyl.rel.total;
  std::vector<obj_t> f0o(tot.object_count());
  for (obj_t o = 0; o < tot.object_count(); ++o)
    f0o[o] = find_total_object(r2, f1.on_object(cyl.rel.left.on_object(o)),
                               f2.on_object(cyl.rel.right.on_object(o)));
  std::vector<mor_t> f0m(tot.morphism_count());
  for (mor_t m = 0; m < tot.morphism_count(); ++m)
    f0m[m] = find_total_morphism(
        r2, f0o[tot.source(m)], f0o[tot.target(m)],
        f1.on_morphism(cyl.rel.left.on_morphism(m)),
        f2.on_morphism(cyl.rel.right.on_morphism(m)));
  Functor f0 = make_functor(cyl.rel.total, r2.total, std::move(f0o),
                            std::move(f0m));
  out.h = make_rel_morphism(std::move(f0), std::move(f1), std::move(f2),
                            cyl.rel, r2);
  return out;
}

NerveHomotopy dowker_homotopy(const RelMorphism& h, const ProductRelation& cyl,
                              const CatRelation& r, int truncation) {
  if (!relation_equal(h.source, cyl.rel))
    throw validation_error("homotopy source must be the cylinder relation");
  NerveHomotopy out;
  SimplicialSet interval = nerve(cyl.left_prod.factor1, truncation);
  DowkerNerveData dr = build_dowker_nerve(r, truncation);
  out.cylinder = sset_product(interval, dr.sset);
  SimplicialSet target = dowker_nerve(h.target, truncation);
  std::vector<std::vector<Chain>> ichains(truncation + 1);
  for (int n = 0; n <= truncation; ++n)
    ichains[n] = enumerate_m_chains(*cyl.left_prod.factor1, n);
  const ProductCategory& lp = cyl.left_prod;
  out.map = make_simplicial_map(
      out.cylinder.sset, std::move(target), [&](int n, int idx) {
        int i = out.cylinder.proj1.apply(n, idx);
        int j = out.cylinder.proj2.apply(n, idx);
        const Chain& t = ichains[n][i];
        const Chain& a = dr.chains[n][j];
        Chain paired;
        paired.base = lp.object_of(t.base, a.base);
        for (int k = 0; k < n; ++k)
          paired.arrows.push_back(lp.morphism_of(t.arrows[k], a.arrows[k]));
        return map_chain(h.f1, paired).label();
      });
  return out;
}

SimplicialMap dowker_product_comparison(const ProductRelation& prod,
                                        int truncation) {
  DowkerNerveData dp = build_dowker_nerve(prod.rel, truncation);
  SimplicialSet dr1 = dowker_nerve(prod.proj1.target, truncation);
  SimplicialSet dr2 = dowker_nerve(prod.proj2.target, truncation);
  SSetProduct target = sset_product(dr1, dr2);
  return make_simplicial_map(
      dp.sset, target.sset, [&](int n, int i) {
        const Chain& c = dp.chains[n][i];
        return product_label(map_chain(prod.proj1.f1, c).label(),
                             map_chain(prod.proj2.f1, c).label());
      });
}

CatRelation set_relation_discrete(const SetRelation& r) {
  CatPtr x = poset_category(r.xs, [](int a, int b) { return a == b; });
  CatPtr y = poset_category(r.ys, [](int a, int b) { return a == b; });
  auto pairs = r.pairs;
  return full_subproduct_relation(x, y, [pairs](obj_t a, obj_t b) {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  });
}

CatRelation set_relation_translation(const SetRelation& r) {
  CatPtr x = translation_category(r.xs);
  CatPtr y = translation_category(r.ys);
  auto pairs = r.pairs;
  return full_subproduct_relation(x, y, [pairs](obj_t a, obj_t b) {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  });
}

}  // namespace dowker
