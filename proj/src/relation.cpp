#include "dowker/relation.hpp"

#include <map>
#include <utility>

namespace dowker {

CatRelation make_relation(CatPtr total, Functor left, Functor right) {
  if (!same_category(left.dom, total) || !same_category(right.dom, total))
    throw validation_error("relation components must share the total domain");
  return CatRelation{std::move(total), std::move(left), std::move(right)};
}

bool relation_equal(const CatRelation& a, const CatRelation& b) {
  return same_category(a.total, b.total) && functor_equal(a.left, b.left) &&
         functor_equal(a.right, b.right);
}

CatRelation transpose(const CatRelation& r) {
  return CatRelation{r.total, r.right, r.left};
}

IdentityRelation identity_relation(CatPtr c, CatPtr d) {
  IdentityRelation out;
  out.prod = product_category(std::move(c), std::move(d));
  out.rel = CatRelation{out.prod.cat, out.prod.proj1, out.prod.proj2};
  return out;
}

CatRelation full_subproduct_relation(
    CatPtr c, CatPtr d, const std::function<bool(obj_t, obj_t)>& keep) {
  std::vector<std::pair<obj_t, obj_t>> objs;
  std::vector<std::string> names;
  std::vector<std::vector<int>> pos(c->object_count(),
                                    std::vector<int>(d->object_count(), -1));
  for (obj_t x = 0; x < c->object_count(); ++x)
    for (obj_t y = 0; y < d->object_count(); ++y)
      if (keep(x, y)) {
        pos[x][y] = static_cast<int>(objs.size());
        objs.emplace_back(x, y);
        names.push_back("(" + c->object_name(x) + "," + d->object_name(y) +
                        ")");
      }
  std::vector<FinCategory::Mor> mors;
  std::map<std::pair<mor_t, mor_t>, mor_t> index;
  std::vector<std::pair<mor_t, mor_t>> parts;
  for (const auto& [sx, sy] : objs)
    for (mor_t f : c->morphisms_from(sx)) {
      obj_t tx = c->target(f);
      for (mor_t g : d->morphisms_from(sy)) {
        obj_t ty = d->target(g);
        if (pos[tx][ty] < 0) continue;
        index[{f, g}] = static_cast<mor_t>(mors.size());
        parts.emplace_back(f, g);
        mors.push_back({"(" + c->morphism(f).name + "," + d->morphism(g).name +
                            ")",
                        pos[sx][sy], pos[tx][ty]});
      }
    }
  if (mors.size() > morphism_limit())
    throw validation_error("subproduct relation exceeds the morphism cap");
  std::vector<mor_t> ids(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i)
    ids[i] = index.at({c->identity(objs[i].first), d->identity(objs[i].second)});
  const std::size_t nm = mors.size();
  std::vector<int32_t> comp(nm * nm, -1);
  for (std::size_t u = 0; u < nm; ++u)
    for (std::size_t v = 0; v < nm; ++v)
      if (mors[v].tgt == mors[u].src)
        comp[u * nm + v] = index.at({c->compose(parts[u].first, parts[v].first),
                                     d->compose(parts[u].second,
                                                parts[v].second)});
  CatPtr total = std::make_shared<FinCategory>(
      std::move(names), std::move(mors), std::move(ids), std::move(comp));
  std::vector<obj_t> oml(objs.size()), omr(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    oml[i] = objs[i].first;
    omr[i] = objs[i].second;
  }
  std::vector<mor_t> mml(nm), mmr(nm);
  for (std::size_t m = 0; m < nm; ++m) {
    mml[m] = parts[m].first;
    mmr[m] = parts[m].second;
  }
  Functor left = make_functor(total, std::move(c), std::move(oml),
                              std::move(mml));
  Functor right = make_functor(total, std::move(d), std::move(omr),
                               std::move(mmr));
  return CatRelation{total, std::move(left), std::move(right)};
}

bool is_full_subcategory_relation(const CatRelation& r) {
  const FinCategory& t = *r.total;
  const FinCategory& c = *r.left.cod;
  const FinCategory& d = *r.right.cod;
  std::map<std::pair<obj_t, obj_t>, int> seen;
  for (obj_t x = 0; x < t.object_count(); ++x) {
    auto key = std::make_pair(r.left.on_object(x), r.right.on_object(x));
    if (!seen.emplace(key, x).second) return false;
  }
  for (obj_t x = 0; x < t.object_count(); ++x)
    for (obj_t y = 0; y < t.object_count(); ++y) {
      std::vector<mor_t> h = t.hom(x, y);
      std::size_t want = c.hom(r.left.on_object(x), r.left.on_object(y)).size() *
                         d.hom(r.right.on_object(x), r.right.on_object(y)).size();
      if (h.size() != want) return false;
      std::map<std::pair<mor_t, mor_t>, int> img;
      for (mor_t m : h)
        if (!img.emplace(std::make_pair(r.left.on_morphism(m),
                                        r.right.on_morphism(m)),
                         m)
                 .second)
          return false;
    }
  return true;
}

RelMorphism make_rel_morphism(Functor f0, Functor f1, Functor f2,
                              const CatRelation& source,
                              const CatRelation& target) {
  if (!same_category(f0.dom, source.total) ||
      !same_category(f0.cod, target.total))
    throw validation_error("f0 must map the source total to the target total");
  if (!same_category(f1.dom, source.left.cod) ||
      !same_category(f1.cod, target.left.cod))
    throw validation_error("f1 must map the left codomains");
  if (!same_category(f2.dom, source.right.cod) ||
      !same_category(f2.cod, target.right.cod))
    throw validation_error("f2 must map the right codomains");
  const FinCategory& t = *source.total;
  for (obj_t x = 0; x < t.object_count(); ++x) {
    if (target.left.on_object(f0.on_object(x)) !=
            f1.on_object(source.left.on_object(x)) ||
        target.right.on_object(f0.on_object(x)) !=
            f2.on_object(source.right.on_object(x)))
      throw validation_error(
          "relation morphism squares fail at object " + t.object_name(x));
  }
  for (mor_t m = 0; m < t.morphism_count(); ++m) {
    if (target.left.on_morphism(f0.on_morphism(m)) !=
            f1.on_morphism(source.left.on_morphism(m)) ||
        target.right.on_morphism(f0.on_morphism(m)) !=
            f2.on_morphism(source.right.on_morphism(m)))
      throw validation_error(
          "relation morphism squares fail at morphism " + t.morphism(m).name);
  }
  return RelMorphism{source, target, std::move(f0), std::move(f1),
                     std::move(f2)};
}

RelMorphism identity_rel_morphism(const CatRelation& r) {
  return RelMorphism{r, r, identity_functor(r.total),
                     identity_functor(r.left.cod),
                     identity_functor(r.right.cod)};
}

RelMorphism compose_rel_morphisms(const RelMorphism& g, const RelMorphism& f) {
  return RelMorphism{f.source, g.target, compose_functors(g.f0, f.f0),
                     compose_functors(g.f1, f.f1),
                     compose_functors(g.f2, f.f2)};
}

RelMorphism transpose(const RelMorphism& f) {
  return RelMorphism{transpose(f.source), transpose(f.target), f.f0, f.f2,
                     f.f1};
}

bool rel_morphism_equal(const RelMorphism& a, const RelMorphism& b) {
  return relation_equal(a.source, b.source) &&
         relation_equal(a.target, b.target) && functor_equal(a.f0, b.f0) &&
         functor_equal(a.f1, b.f1) && functor_equal(a.f2, b.f2);
}

ProductRelation product_relation(const CatRelation& r, const CatRelation& s) {
  ProductRelation out;
  out.total_prod = product_category(r.total, s.total);
  out.left_prod = product_category(r.left.cod, s.left.cod);
  out.right_prod = product_category(r.right.cod, s.right.cod);
  Functor left = functor_product(r.left, s.left, out.total_prod, out.left_prod);
  Functor right =
      functor_product(r.right, s.right, out.total_prod, out.right_prod);
  out.rel = CatRelation{out.total_prod.cat, std::move(left), std::move(right)};
  out.proj1 = make_rel_morphism(out.total_prod.proj1, out.left_prod.proj1,
                                out.right_prod.proj1, out.rel, r);
  out.proj2 = make_rel_morphism(out.total_prod.proj2, out.left_prod.proj2,
                                out.right_prod.proj2, out.rel, s);
  return out;
}

namespace {

Functor pair_functors(const Functor& f, const Functor& g,
                      const ProductCategory& cod) {
  if (!same_category(f.dom, g.dom))
    throw validation_error("pairing needs a common domain");
  std::vector<obj_t> om(f.dom->object_count());
  std::vector<mor_t> mm(f.dom->morphism_count());
  for (obj_t o = 0; o < f.dom->object_count(); ++o)
    om[o] = cod.object_of(f.on_object(o), g.on_object(o));
  for (mor_t m = 0; m < f.dom->morphism_count(); ++m)
    mm[m] = cod.morphism_of(f.on_morphism(m), g.on_morphism(m));
  return make_functor(f.dom, cod.cat, std::move(om), std::move(mm));
}

}  // namespace

RelMorphism pair_rel_morphisms(const RelMorphism& to_first,
                               const RelMorphism& to_second,
                               const ProductRelation& prod) {
  if (!relation_equal(to_first.source, to_second.source))
    throw validation_error("pairing needs a common source relation");
  Functor f0 = pair_functors(to_first.f0, to_second.f0, prod.total_prod);
  Functor f1 = pair_functors(to_first.f1, to_second.f1, prod.left_prod);
  Functor f2 = pair_functors(to_first.f2, to_second.f2, prod.right_prod);
  return make_rel_morphism(std::move(f0), std::move(f1), std::move(f2),
                           to_first.source, prod.rel);
}

RelMorphism product_rel_morphism(const RelMorphism& f, const RelMorphism& g,
                                 const ProductRelation& dom,
                                 const ProductRelation& cod) {
  Functor f0 = functor_product(f.f0, g.f0, dom.total_prod, cod.total_prod);
  Functor f1 = functor_product(f.f1, g.f1, dom.left_prod, cod.left_prod);
  Functor f2 = functor_product(f.f2, g.f2, dom.right_prod, cod.right_prod);
  return make_rel_morphism(std::move(f0), std::move(f1), std::move(f2),
                           dom.rel, cod.rel);
}

}  // namespace dowker
