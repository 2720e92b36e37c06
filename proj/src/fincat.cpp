#include "dowker/fincat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace dowker {

namespace {

std::string mor_str(const FinCategory& c, mor_t m) {
  std::ostringstream os;
  os << c.morphism(m).name << ": " << c.object_name(c.source(m)) << " -> "
     << c.object_name(c.target(m));
  return os.str();
}

}  // namespace

std::size_t& morphism_limit() {
  static std::size_t limit = 4096;
  return limit;
}

FinCategory::FinCategory(std::vector<std::string> objects,
                         std::vector<Mor> morphisms,
                         std::vector<mor_t> identities,
                         std::vector<int32_t> compose_table, Validate check)
    : objects_(std::move(objects)),
      mors_(std::move(morphisms)),
      identity_(std::move(identities)),
      comp_(std::move(compose_table)) {
  const std::size_t nm = mors_.size();
  if (nm > morphism_limit())
    throw validation_error("category exceeds the morphism cap (" +
                           std::to_string(nm) + " > " +
                           std::to_string(morphism_limit()) + ")");
  if (identity_.size() != objects_.size())
    throw validation_error("identity table size does not match object count");
  if (comp_.size() != nm * nm)
    throw validation_error("composition table has wrong size");
  for (const Mor& m : mors_) {
    if (m.src < 0 || m.src >= object_count() || m.tgt < 0 ||
        m.tgt >= object_count())
      throw validation_error("morphism " + m.name +
                             " has out-of-range endpoints");
  }
  from_.assign(objects_.size(), {});
  for (mor_t m = 0; m < morphism_count(); ++m) from_[mors_[m].src].push_back(m);
  if (check == Validate::yes) validate();
}

mor_t FinCategory::compose(mor_t g, mor_t f) const {
  if (!composable(g, f))
    throw validation_error("compose(" + mors_[g].name + ", " + mors_[f].name +
                           "): target/source mismatch");
  int32_t r = comp_[static_cast<std::size_t>(g) * mors_.size() + f];
  if (r < 0)
    throw validation_error("composition table has no entry for (" +
                           mors_[g].name + ", " + mors_[f].name + ")");
  return r;
}

std::vector<mor_t> FinCategory::hom(obj_t x, obj_t y) const {
  std::vector<mor_t> out;
  for (mor_t m : from_[x])
    if (mors_[m].tgt == y) out.push_back(m);
  return out;
}

obj_t FinCategory::object_index(const std::string& name) const {
  for (obj_t o = 0; o < object_count(); ++o)
    if (objects_[o] == name) return o;
  return -1;
}

mor_t FinCategory::morphism_index(const std::string& name) const {
  for (mor_t m = 0; m < morphism_count(); ++m)
    if (mors_[m].name == name) return m;
  return -1;
}

void FinCategory::validate() const {
  const std::size_t nm = mors_.size();
  {
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (!seen.emplace(objects_[i], 1).second)
        throw validation_error("duplicate object name " + objects_[i]);
    seen.clear();
    for (const Mor& m : mors_)
      if (!seen.emplace(m.name, 1).second)
        throw validation_error("duplicate morphism name " + m.name);
  }
  for (obj_t o = 0; o < object_count(); ++o) {
    mor_t id = identity_[o];
    if (id < 0 || id >= morphism_count())
      throw validation_error("missing identity for object " + objects_[o]);
    if (mors_[id].src != o || mors_[id].tgt != o)
      throw validation_error("identity of " + objects_[o] +
                             " is not an endomorphism of it");
  }
  // Table entries must be defined exactly on composable pairs and typed.
  for (mor_t g = 0; g < morphism_count(); ++g) {
    for (mor_t f = 0; f < morphism_count(); ++f) {
      int32_t r = comp_[static_cast<std::size_t>(g) * nm + f];
      if (!composable(g, f)) {
        if (r >= 0)
          throw validation_error("composition defined on non-composable pair (" +
                                 mors_[g].name + ", " + mors_[f].name + ")");
        continue;
      }
      if (r < 0)
        throw validation_error("composition undefined on composable pair (" +
                               mors_[g].name + ", " + mors_[f].name + ")");
      if (r >= morphism_count())
        throw validation_error("composition table entry out of range");
      if (mors_[r].src != mors_[f].src || mors_[r].tgt != mors_[g].tgt)
        throw validation_error("composite of (" + mors_[g].name + ", " +
                               mors_[f].name + ") has wrong endpoints");
    }
  }
  // Units.
  for (mor_t f = 0; f < morphism_count(); ++f) {
    if (compose(identity_[mors_[f].tgt], f) != f ||
        compose(f, identity_[mors_[f].src]) != f)
      throw validation_error("unit law fails at " + mor_str(*this, f));
  }
  // Associativity, over all composable triples.
  for (mor_t f = 0; f < morphism_count(); ++f) {
    for (mor_t g : from_[mors_[f].tgt]) {
      mor_t gf = compose(g, f);
      for (mor_t h : from_[mors_[g].tgt]) {
        if (compose(h, gf) != compose(compose(h, g), f))
          throw validation_error("associativity fails at triple (" +
                                 mors_[h].name + ", " + mors_[g].name + ", " +
                                 mors_[f].name + ")");
      }
    }
  }
}

bool FinCategory::operator==(const FinCategory& other) const {
  return objects_ == other.objects_ &&
         [&] {
           if (mors_.size() != other.mors_.size()) return false;
           for (std::size_t i = 0; i < mors_.size(); ++i)
             if (mors_[i].name != other.mors_[i].name ||
                 mors_[i].src != other.mors_[i].src ||
                 mors_[i].tgt != other.mors_[i].tgt)
               return false;
           return true;
         }() &&
         identity_ == other.identity_ && comp_ == other.comp_;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::optional<obj_t> find_initial_object(const FinCategory& c) {
  for (obj_t x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (obj_t y = 0; y < c.object_count() && ok; ++y)
      ok = c.hom(x, y).size() == 1;
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<obj_t> find_terminal_object(const FinCategory& c) {
  for (obj_t x = 0; x < c.object_count(); ++x) {
    bool ok = true;
    for (obj_t y = 0; y < c.object_count() && ok; ++y)
      ok = c.hom(y, x).size() == 1;
    if (ok) return x;
  }
  return std::nullopt;
}

Functor make_functor(CatPtr dom, CatPtr cod, std::vector<obj_t> object_map,
                     std::vector<mor_t> morphism_map, Validate check) {
  Functor f{std::move(dom), std::move(cod), std::move(object_map),
            std::move(morphism_map)};
  if (check == Validate::no) return f;
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  if (static_cast<int>(f.object_map.size()) != a.object_count() ||
      static_cast<int>(f.morphism_map.size()) != a.morphism_count())
    throw validation_error("functor maps have wrong sizes");
  for (obj_t o = 0; o < a.object_count(); ++o)
    if (f.object_map[o] < 0 || f.object_map[o] >= b.object_count())
      throw validation_error("functor object map out of range at " +
                             a.object_name(o));
  for (mor_t m = 0; m < a.morphism_count(); ++m) {
    mor_t fm = f.morphism_map[m];
    if (fm < 0 || fm >= b.morphism_count())
      throw validation_error("functor morphism map out of range at " +
                             a.morphism(m).name);
    if (b.source(fm) != f.object_map[a.source(m)] ||
        b.target(fm) != f.object_map[a.target(m)])
      throw validation_error("functor does not preserve endpoints of " +
                             mor_str(a, m));
  }
  for (obj_t o = 0; o < a.object_count(); ++o)
    if (f.morphism_map[a.identity(o)] != b.identity(f.object_map[o]))
      throw validation_error("functor does not preserve the identity of " +
                             a.object_name(o));
  for (mor_t m = 0; m < a.morphism_count(); ++m) {
    for (mor_t g : a.morphisms_from(a.target(m))) {
      if (f.morphism_map[a.compose(g, m)] !=
          b.compose(f.morphism_map[g], f.morphism_map[m]))
        throw validation_error("functor does not preserve the composite (" +
                               a.morphism(g).name + ", " + a.morphism(m).name +
                               ")");
    }
  }
  return f;
}

Functor identity_functor(CatPtr c) {
  std::vector<obj_t> om(c->object_count());
  std::vector<mor_t> mm(c->morphism_count());
  for (obj_t o = 0; o < c->object_count(); ++o) om[o] = o;
  for (mor_t m = 0; m < c->morphism_count(); ++m) mm[m] = m;
  CatPtr d = c;
  return make_functor(std::move(d), std::move(c), std::move(om), std::move(mm),
                      Validate::no);
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_category(f.cod, g.dom))
    throw validation_error("functor composition: domain/codomain mismatch");
  std::vector<obj_t> om(f.object_map.size());
  std::vector<mor_t> mm(f.morphism_map.size());
  for (std::size_t o = 0; o < om.size(); ++o) om[o] = g.object_map[f.object_map[o]];
  for (std::size_t m = 0; m < mm.size(); ++m)
    mm[m] = g.morphism_map[f.morphism_map[m]];
  return Functor{f.dom, g.cod, std::move(om), std::move(mm)};
}

bool functor_equal(const Functor& a, const Functor& b) {
  return same_category(a.dom, b.dom) && same_category(a.cod, b.cod) &&
         a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

bool is_isomorphism(const Functor& f) {
  if (f.dom->object_count() != f.cod->object_count() ||
      f.dom->morphism_count() != f.cod->morphism_count())
    return false;
  std::vector<char> oh(f.cod->object_count(), 0), mh(f.cod->morphism_count(), 0);
  for (obj_t o : f.object_map) {
    if (oh[o]) return false;
    oh[o] = 1;
  }
  for (mor_t m : f.morphism_map) {
    if (mh[m]) return false;
    mh[m] = 1;
  }
  return true;
}

std::string Chain::label() const {
  std::ostringstream os;
  os << "C" << base;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    os << (i == 0 ? ":" : ",") << arrows[i];
  return os.str();
}

obj_t chain_object(const FinCategory& c, const Chain& ch, int i) {
  if (i == 0) return ch.base;
  return c.target(ch.arrows[i - 1]);
}

Chain chain_face(const FinCategory& c, const Chain& ch, int i) {
  const int m = ch.length();
  if (m == 0) throw validation_error("face of a 0-chain");
  Chain out;
  if (i == 0) {
    out.base = c.target(ch.arrows[0]);
    out.arrows.assign(ch.arrows.begin() + 1, ch.arrows.end());
  } else if (i == m) {
    out.base = ch.base;
    out.arrows.assign(ch.arrows.begin(), ch.arrows.end() - 1);
  } else {
    out.base = ch.base;
    out.arrows.assign(ch.arrows.begin(), ch.arrows.end());
    mor_t glued = c.compose(out.arrows[i], out.arrows[i - 1]);
    out.arrows[i - 1] = glued;
    out.arrows.erase(out.arrows.begin() + i);
  }
  return out;
}

Chain chain_degeneracy(const FinCategory& c, const Chain& ch, int i) {
  Chain out = ch;
  out.arrows.insert(out.arrows.begin() + i, c.identity(chain_object(c, ch, i)));
  return out;
}

bool chain_has_identity_arrow(const FinCategory& c, const Chain& ch) {
  for (mor_t m : ch.arrows)
    if (c.is_identity(m)) return true;
  return false;
}

std::vector<Chain> enumerate_m_chains(const FinCategory& c, int m) {
  std::vector<Chain> out;
  if (m == 0) {
    for (obj_t o = 0; o < c.object_count(); ++o) out.push_back(Chain{o, {}});
    return out;
  }
  Chain cur;
  std::function<void(obj_t, int)> dfs = [&](obj_t at, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (mor_t a : c.morphisms_from(at)) {
      cur.arrows.push_back(a);
      dfs(c.target(a), left - 1);
      cur.arrows.pop_back();
    }
  };
  for (obj_t o = 0; o < c.object_count(); ++o) {
    cur.base = o;
    dfs(o, m);
  }
  return out;
}

mor_t hom_unique(const FinCategory& c, obj_t x, obj_t y) {
  std::vector<mor_t> h = c.hom(x, y);
  if (h.size() != 1)
    throw validation_error("expected a unique morphism " + c.object_name(x) +
                           " -> " + c.object_name(y) + ", found " +
                           std::to_string(h.size()));
  return h[0];
}

namespace {

// Builds a category with at most one morphism per ordered object pair,
// given by an edge predicate closed under composition.
CatPtr thin_category(std::vector<std::string> names,
                     const std::function<bool(int, int)>& related) {
  const int n = static_cast<int>(names.size());
  std::vector<FinCategory::Mor> mors;
  std::vector<std::vector<mor_t>> at(n, std::vector<mor_t>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (related(x, y)) {
        at[x][y] = static_cast<mor_t>(mors.size());
        mors.push_back({names[x] + "->" + names[y], x, y});
      }
  std::vector<mor_t> ids(n);
  for (int x = 0; x < n; ++x) {
    if (at[x][x] < 0)
      throw validation_error("relation is not reflexive at " + names[x]);
    ids[x] = at[x][x];
  }
  const std::size_t nm = mors.size();
  std::vector<int32_t> comp(nm * nm, -1);
  for (mor_t f = 0; f < static_cast<mor_t>(nm); ++f)
    for (mor_t g = 0; g < static_cast<mor_t>(nm); ++g)
      if (mors[f].tgt == mors[g].src) {
        mor_t gf = at[mors[f].src][mors[g].tgt];
        if (gf < 0)
          throw validation_error("relation is not transitive at (" +
                                 names[mors[f].src] + ", " +
                                 names[mors[g].tgt] + ")");
        comp[static_cast<std::size_t>(g) * nm + f] = gf;
      }
  return std::make_shared<FinCategory>(std::move(names), std::move(mors),
                                       std::move(ids), std::move(comp));
}

}  // namespace

CatPtr ordinal(int n) {
  if (n < 0) throw validation_error("ordinal index must be nonnegative");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  return thin_category(std::move(names),
                       [](int i, int j) { return i <= j; });
}

CatPtr poset_category(std::vector<std::string> elements,
                      const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(elements.size());
  for (int x = 0; x < n; ++x) {
    if (!leq(x, x))
      throw validation_error("order not reflexive at " + elements[x]);
    for (int y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x))
        throw validation_error("order not antisymmetric at (" + elements[x] +
                               ", " + elements[y] + ")");
      for (int z = 0; z < n; ++z)
        if (leq(x, y) && leq(y, z) && !leq(x, z))
          throw validation_error("order not transitive at (" + elements[x] +
                                 ", " + elements[y] + ", " + elements[z] + ")");
    }
  }
  return thin_category(std::move(elements), leq);
}

CatPtr translation_category(std::vector<std::string> elements) {
  return thin_category(std::move(elements), [](int, int) { return true; });
}

obj_t ProductCategory::object_of(obj_t c, obj_t d) const {
  return c * factor2->object_count() + d;
}
mor_t ProductCategory::morphism_of(mor_t f, mor_t g) const {
  return f * factor2->morphism_count() + g;
}
std::pair<obj_t, obj_t> ProductCategory::object_parts(obj_t o) const {
  int k = factor2->object_count();
  return {o / k, o % k};
}
std::pair<mor_t, mor_t> ProductCategory::morphism_parts(mor_t m) const {
  int k = factor2->morphism_count();
  return {m / k, m % k};
}

ProductCategory product_category(CatPtr c, CatPtr d) {
  ProductCategory out;
  out.factor1 = c;
  out.factor2 = d;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(c->object_count()) *
                d->object_count());
  for (obj_t x = 0; x < c->object_count(); ++x)
    for (obj_t y = 0; y < d->object_count(); ++y)
      names.push_back("(" + c->object_name(x) + "," + d->object_name(y) + ")");
  const std::size_t nm = static_cast<std::size_t>(c->morphism_count()) *
                         d->morphism_count();
  if (nm > morphism_limit())
    throw validation_error("product category exceeds the morphism cap");
  std::vector<FinCategory::Mor> mors;
  mors.reserve(nm);
  const int k2o = d->object_count();
  for (mor_t f = 0; f < c->morphism_count(); ++f)
    for (mor_t g = 0; g < d->morphism_count(); ++g)
      mors.push_back({"(" + c->morphism(f).name + "," + d->morphism(g).name +
                          ")",
                      c->source(f) * k2o + d->source(g),
                      c->target(f) * k2o + d->target(g)});
  std::vector<mor_t> ids(names.size());
  const int k2m = d->morphism_count();
  for (obj_t x = 0; x < c->object_count(); ++x)
    for (obj_t y = 0; y < d->object_count(); ++y)
      ids[x * k2o + y] = c->identity(x) * k2m + d->identity(y);
  std::vector<int32_t> comp(nm * nm, -1);
  for (std::size_t f = 0; f < nm; ++f)
    for (std::size_t g = 0; g < nm; ++g) {
      mor_t f1 = static_cast<mor_t>(f) / k2m, f2 = static_cast<mor_t>(f) % k2m;
      mor_t g1 = static_cast<mor_t>(g) / k2m, g2 = static_cast<mor_t>(g) % k2m;
      if (c->composable(g1, f1) && d->composable(g2, f2))
        comp[g * nm + f] =
            c->compose(g1, f1) * k2m + d->compose(g2, f2);
    }
  out.cat = std::make_shared<FinCategory>(std::move(names), std::move(mors),
                                          std::move(ids), std::move(comp));
  std::vector<obj_t> om1(out.cat->object_count()), om2(out.cat->object_count());
  std::vector<mor_t> mm1(out.cat->morphism_count()),
      mm2(out.cat->morphism_count());
  for (obj_t o = 0; o < out.cat->object_count(); ++o) {
    om1[o] = o / k2o;
    om2[o] = o % k2o;
  }
  for (mor_t m = 0; m < out.cat->morphism_count(); ++m) {
    mm1[m] = m / k2m;
    mm2[m] = m % k2m;
  }
  out.proj1 = make_functor(out.cat, c, std::move(om1), std::move(mm1));
  out.proj2 = make_functor(out.cat, d, std::move(om2), std::move(mm2));
  return out;
}

CommaCategory comma_category(const Functor& f, const Functor& g) {
  if (!same_category(f.cod, g.cod))
    throw validation_error("comma category needs a common codomain");
  const FinCategory& a = *f.cod;
  const FinCategory& c = *f.dom;
  const FinCategory& d = *g.dom;
  CommaCategory out;
  std::vector<std::string> names;
  for (obj_t x = 0; x < c.object_count(); ++x)
    for (obj_t y = 0; y < d.object_count(); ++y)
      for (mor_t h : a.hom(f.object_map[x], g.object_map[y])) {
        out.triples.push_back({x, y, h});
        names.push_back("(" + c.object_name(x) + "," + d.object_name(y) + "," +
                        a.morphism(h).name + ")");
      }
  const int nobj = static_cast<int>(out.triples.size());
  std::vector<FinCategory::Mor> mors;
  // key: (source object, target object, left arrow, right arrow)
  std::map<std::tuple<int, int, mor_t, mor_t>, mor_t> index;
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y) {
      const auto& ox = out.triples[x];
      const auto& oy = out.triples[y];
      for (mor_t al : c.hom(ox.c, oy.c))
        for (mor_t ar : d.hom(ox.d, oy.d)) {
          if (a.compose(g.morphism_map[ar], ox.f) !=
              a.compose(oy.f, f.morphism_map[al]))
            continue;
          index[{x, y, al, ar}] = static_cast<mor_t>(mors.size());
          mors.push_back({"(" + c.morphism(al).name + "," +
                              d.morphism(ar).name + ")@" + std::to_string(x) +
                              ">" + std::to_string(y),
                          x, y});
        }
    }
  if (mors.size() > morphism_limit())
    throw validation_error("comma category exceeds the morphism cap");
  std::vector<std::tuple<int, int, mor_t, mor_t>> keys(mors.size());
  for (const auto& [k, v] : index) keys[v] = k;
  std::vector<mor_t> ids(nobj);
  for (int x = 0; x < nobj; ++x)
    ids[x] = index.at({x, x, c.identity(out.triples[x].c),
                       d.identity(out.triples[x].d)});
  const std::size_t nm = mors.size();
  std::vector<int32_t> comp(nm * nm, -1);
  for (std::size_t u = 0; u < nm; ++u)
    for (std::size_t v = 0; v < nm; ++v) {
      const auto& [vs, vt, val, var] = keys[v];
      const auto& [us, ut, ual, uar] = keys[u];
      if (vt != us) continue;  // u after v
      comp[u * nm + v] = index.at(
          {vs, ut, c.compose(ual, val), d.compose(uar, var)});
    }
  out.cat = std::make_shared<FinCategory>(std::move(names), std::move(mors),
                                          std::move(ids), std::move(comp));
  std::vector<obj_t> oml(nobj), omr(nobj);
  std::vector<mor_t> mml(nm), mmr(nm);
  for (int x = 0; x < nobj; ++x) {
    oml[x] = out.triples[x].c;
    omr[x] = out.triples[x].d;
  }
  for (std::size_t m = 0; m < nm; ++m) {
    mml[m] = std::get<2>(keys[m]);
    mmr[m] = std::get<3>(keys[m]);
  }
  out.proj_left = make_functor(out.cat, f.dom, std::move(oml), std::move(mml));
  out.proj_right = make_functor(out.cat, g.dom, std::move(omr), std::move(mmr));
  return out;
}

Subcategory full_subcategory(CatPtr c, std::vector<obj_t> objects) {
  Subcategory out;
  out.objects = std::move(objects);
  std::vector<int> obj_pos(c->object_count(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.objects.size(); ++i) {
    obj_t o = out.objects[i];
    if (o < 0 || o >= c->object_count())
      throw validation_error("full subcategory: object index out of range");
    if (obj_pos[o] >= 0)
      throw validation_error("full subcategory: repeated object");
    obj_pos[o] = static_cast<int>(i);
    names.push_back(c->object_name(o));
  }
  std::vector<int> mor_pos(c->morphism_count(), -1);
  std::vector<FinCategory::Mor> mors;
  for (mor_t m = 0; m < c->morphism_count(); ++m) {
    if (obj_pos[c->source(m)] >= 0 && obj_pos[c->target(m)] >= 0) {
      mor_pos[m] = static_cast<int>(mors.size());
      out.morphisms.push_back(m);
      mors.push_back({c->morphism(m).name, obj_pos[c->source(m)],
                      obj_pos[c->target(m)]});
    }
  }
  std::vector<mor_t> ids(out.objects.size());
  for (std::size_t i = 0; i < out.objects.size(); ++i)
    ids[i] = mor_pos[c->identity(out.objects[i])];
  const std::size_t nm = mors.size();
  std::vector<int32_t> comp(nm * nm, -1);
  for (std::size_t u = 0; u < nm; ++u)
    for (std::size_t v = 0; v < nm; ++v)
      if (mors[v].tgt == mors[u].src)
        comp[u * nm + v] =
            mor_pos[c->compose(out.morphisms[u], out.morphisms[v])];
  out.cat = std::make_shared<FinCategory>(std::move(names), std::move(mors),
                                          std::move(ids), std::move(comp));
  std::vector<obj_t> om = out.objects;
  std::vector<mor_t> mm = out.morphisms;
  out.inclusion = make_functor(out.cat, std::move(c), std::move(om),
                               std::move(mm));
  return out;
}

Functor functor_product(const Functor& f, const Functor& g,
                        const ProductCategory& dom,
                        const ProductCategory& cod) {
  if (!same_category(dom.factor1, f.dom) || !same_category(dom.factor2, g.dom) ||
      !same_category(cod.factor1, f.cod) || !same_category(cod.factor2, g.cod))
    throw validation_error("functor product: factor mismatch");
  std::vector<obj_t> om(dom.cat->object_count());
  std::vector<mor_t> mm(dom.cat->morphism_count());
  for (obj_t o = 0; o < dom.cat->object_count(); ++o) {
    auto [x, y] = dom.object_parts(o);
    om[o] = cod.object_of(f.object_map[x], g.object_map[y]);
  }
  for (mor_t m = 0; m < dom.cat->morphism_count(); ++m) {
    auto [x, y] = dom.morphism_parts(m);
    mm[m] = cod.morphism_of(f.morphism_map[x], g.morphism_map[y]);
  }
  return make_functor(dom.cat, cod.cat, std::move(om), std::move(mm));
}

Functor chain_to_functor(CatPtr c, const Chain& ch) {
  const int m = ch.length();
  CatPtr dom = ordinal(m);
  std::vector<obj_t> om(m + 1);
  for (int i = 0; i <= m; ++i) om[i] = chain_object(*c, ch, i);
  std::vector<mor_t> mm(dom->morphism_count());
  for (mor_t a = 0; a < dom->morphism_count(); ++a) {
    int i = dom->source(a), j = dom->target(a);
    mor_t acc = c->identity(om[i]);
    for (int k = i; k < j; ++k) acc = c->compose(ch.arrows[k], acc);
    mm[a] = acc;
  }
  return make_functor(std::move(dom), std::move(c), std::move(om),
                      std::move(mm));
}

Chain functor_chain(const Functor& f) {
  const FinCategory& dom = *f.dom;
  const int m = dom.object_count() - 1;
  Chain ch;
  ch.base = f.object_map[0];
  for (int i = 0; i < m; ++i)
    ch.arrows.push_back(f.morphism_map[hom_unique(dom, i, i + 1)]);
  return ch;
}

std::vector<Functor> enumerate_chains(CatPtr c, int m) {
  std::vector<Functor> out;
  for (const Chain& ch : enumerate_m_chains(*c, m))
    out.push_back(chain_to_functor(c, ch));
  return out;
}

}  // namespace dowker
