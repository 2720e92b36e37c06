#include "dowker/dowker.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace dowker {

std::string RectangleSimplex::label() const {
  std::ostringstream os;
  os << "G" << m << "x" << n << ":o";
  for (std::size_t i = 0; i < obj.size(); ++i)
    os << (i ? "," : "") << obj[i];
  os << ";h";
  for (std::size_t i = 0; i < hmor.size(); ++i)
    os << (i ? "," : "") << hmor[i];
  os << ";v";
  for (std::size_t i = 0; i < vmor.size(); ++i)
    os << (i ? "," : "") << vmor[i];
  return os.str();
}

namespace {

// Composite of horizontal steps from column i0 to i1 along row j.
mor_t row_composite(const FinCategory& c, const RectangleSimplex& r, int j,
                    int i0, int i1) {
  if (i0 == i1) return c.identity(r.at(i0, j));
  mor_t acc = r.h(i0, j);
  for (int i = i0 + 1; i < i1; ++i) acc = c.compose(r.h(i, j), acc);
  return acc;
}

mor_t col_composite(const FinCategory& c, const RectangleSimplex& r, int i,
                    int j0, int j1) {
  if (j0 == j1) return c.identity(r.at(i, j0));
  mor_t acc = r.v(i, j0);
  for (int j = j0 + 1; j < j1; ++j) acc = c.compose(r.v(i, j), acc);
  return acc;
}

std::vector<int> delta(int k, int m) {
  std::vector<int> out;
  for (int i = 0; i <= m; ++i)
    if (i != k) out.push_back(i);
  return out;
}

std::vector<int> sigma(int k, int m) {
  std::vector<int> out;
  for (int i = 0; i <= m; ++i) {
    out.push_back(i);
    if (i == k) out.push_back(i);
  }
  return out;
}

std::vector<int> iota(int m) {
  std::vector<int> out(m + 1);
  for (int i = 0; i <= m; ++i) out[i] = i;
  return out;
}

}  // namespace

RectangleSimplex apply_grid(const FinCategory& total, const RectangleSimplex& r,
                            const std::vector<int>& alpha,
                            const std::vector<int>& beta) {
  RectangleSimplex out;
  out.m = static_cast<int>(alpha.size()) - 1;
  out.n = static_cast<int>(beta.size()) - 1;
  out.obj.resize((out.m + 1) * (out.n + 1));
  out.hmor.resize(out.m * (out.n + 1));
  out.vmor.resize((out.m + 1) * out.n);
  for (int i = 0; i <= out.m; ++i)
    for (int j = 0; j <= out.n; ++j)
      out.obj[i * (out.n + 1) + j] = r.at(alpha[i], beta[j]);
  for (int i = 0; i < out.m; ++i)
    for (int j = 0; j <= out.n; ++j)
      out.hmor[i * (out.n + 1) + j] =
          row_composite(total, r, beta[j], alpha[i], alpha[i + 1]);
  for (int i = 0; i <= out.m; ++i)
    for (int j = 0; j < out.n; ++j)
      out.vmor[i * out.n + j] =
          col_composite(total, r, alpha[i], beta[j], beta[j + 1]);
  return out;
}

RectangleSimplex transpose_grid(const RectangleSimplex& r) {
  RectangleSimplex out;
  out.m = r.n;
  out.n = r.m;
  out.obj.resize((out.m + 1) * (out.n + 1));
  out.hmor.resize(out.m * (out.n + 1));
  out.vmor.resize((out.m + 1) * out.n);
  for (int j = 0; j <= r.n; ++j)
    for (int i = 0; i <= r.m; ++i)
      out.obj[j * (out.n + 1) + i] = r.at(i, j);
  for (int j = 0; j < r.n; ++j)
    for (int i = 0; i <= r.m; ++i)
      out.hmor[j * (out.n + 1) + i] = r.v(i, j);
  for (int j = 0; j <= r.n; ++j)
    for (int i = 0; i < r.m; ++i)
      out.vmor[j * out.n + i] = r.h(i, j);
  return out;
}

bool is_valid_rectangle(const CatRelation& rel, const RectangleSimplex& r) {
  const FinCategory& t = *rel.total;
  const Functor& lf = rel.left;
  const Functor& rf = rel.right;
  for (int i = 0; i < r.m; ++i)
    for (int j = 0; j <= r.n; ++j) {
      mor_t h = r.h(i, j);
      if (t.source(h) != r.at(i, j) || t.target(h) != r.at(i + 1, j))
        return false;
      if (!rel.right.cod->is_identity(rf.on_morphism(h))) return false;
      if (lf.on_morphism(h) != lf.on_morphism(r.h(i, 0))) return false;
    }
  for (int i = 0; i <= r.m; ++i)
    for (int j = 0; j < r.n; ++j) {
      mor_t v = r.v(i, j);
      if (t.source(v) != r.at(i, j) || t.target(v) != r.at(i, j + 1))
        return false;
      if (!rel.left.cod->is_identity(lf.on_morphism(v))) return false;
      if (rf.on_morphism(v) != rf.on_morphism(r.v(0, j))) return false;
    }
  for (int i = 0; i < r.m; ++i)
    for (int j = 0; j < r.n; ++j)
      if (t.compose(r.v(i + 1, j), r.h(i, j)) !=
          t.compose(r.h(i, j + 1), r.v(i, j)))
        return false;
  return true;
}

bool diagonal_degenerate_at(const FinCategory& total,
                            const RectangleSimplex& r, int i) {
  if (r.m != r.n || i < 0 || i >= r.m) return false;
  for (int j = 0; j <= r.n; ++j)
    if (!total.is_identity(r.h(i, j))) return false;
  for (int k = 0; k <= r.m; ++k)
    if (!total.is_identity(r.v(k, i))) return false;
  return true;
}

Chain grid_left_chain(const CatRelation& rel, const RectangleSimplex& r) {
  Chain a;
  a.base = rel.left.on_object(r.at(0, 0));
  for (int i = 0; i < r.m; ++i)
    a.arrows.push_back(rel.left.on_morphism(r.h(i, 0)));
  return a;
}

Chain grid_right_chain(const CatRelation& rel, const RectangleSimplex& r) {
  Chain b;
  b.base = rel.right.on_object(r.at(0, 0));
  for (int j = 0; j < r.n; ++j)
    b.arrows.push_back(rel.right.on_morphism(r.v(0, j)));
  return b;
}

RectangleSimplex map_grid(const RelMorphism& f, const RectangleSimplex& r) {
  RectangleSimplex out = r;
  for (obj_t& o : out.obj) o = f.f0.on_object(o);
  for (mor_t& m : out.hmor) m = f.f0.on_morphism(m);
  for (mor_t& m : out.vmor) m = f.f0.on_morphism(m);
  return out;
}

Chain map_chain(const Functor& f, const Chain& c) {
  Chain out;
  out.base = f.on_object(c.base);
  for (mor_t a : c.arrows) out.arrows.push_back(f.on_morphism(a));
  return out;
}

namespace {

// Chains in the total category whose right components are identities; the
// left components then assemble the projected chain.  With `fixed_a` the
// projection is pinned.
std::vector<RectangleSimplex> base_rows(const CatRelation& rel, int m,
                                        const Chain* fixed_a) {
  const FinCategory& t = *rel.total;
  const FinCategory& dcat = *rel.right.cod;
  std::vector<RectangleSimplex> out;
  std::vector<mor_t> arrows;
  std::vector<obj_t> objs;
  std::function<void(obj_t)> dfs = [&](obj_t at) {
    int depth = static_cast<int>(arrows.size());
    if (depth == m) {
      RectangleSimplex g;
      g.m = m;
      g.n = 0;
      g.obj = objs;
      g.hmor = arrows;
      out.push_back(std::move(g));
      return;
    }
    for (mor_t h : t.morphisms_from(at)) {
      if (!dcat.is_identity(rel.right.on_morphism(h))) continue;
      if (fixed_a && rel.left.on_morphism(h) != fixed_a->arrows[depth])
        continue;
      arrows.push_back(h);
      objs.push_back(t.target(h));
      dfs(t.target(h));
      objs.pop_back();
      arrows.pop_back();
    }
  };
  for (obj_t x = 0; x < t.object_count(); ++x) {
    if (fixed_a && rel.left.on_object(x) != fixed_a->base) continue;
    objs.assign(1, x);
    dfs(x);
  }
  return out;
}

// All extensions of a grid by one more row on top.
std::vector<RectangleSimplex> extend_rows(const CatRelation& rel,
                                          const RectangleSimplex& g) {
  const FinCategory& t = *rel.total;
  const FinCategory& ccat = *rel.left.cod;
  const FinCategory& dcat = *rel.right.cod;
  const int m = g.m, n = g.n;
  std::vector<RectangleSimplex> out;
  std::vector<mor_t> vsteps(m + 1), hsteps(std::max(m, 0));
  mor_t bstep = -1;
  std::function<void(int)> dfs = [&](int i) {
    if (i > m) {
      RectangleSimplex e;
      e.m = m;
      e.n = n + 1;
      e.obj.resize((m + 1) * (n + 2));
      e.hmor.resize(m * (n + 2));
      e.vmor.resize((m + 1) * (n + 1));
      for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= n; ++b) e.obj[a * (n + 2) + b] = g.at(a, b);
        e.obj[a * (n + 2) + n + 1] = t.target(vsteps[a]);
        for (int b = 0; b < n; ++b) e.vmor[a * (n + 1) + b] = g.v(a, b);
        e.vmor[a * (n + 1) + n] = vsteps[a];
      }
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b <= n; ++b) e.hmor[a * (n + 2) + b] = g.h(a, b);
        e.hmor[a * (n + 2) + n + 1] = hsteps[a];
      }
      out.push_back(std::move(e));
      return;
    }
    obj_t top = g.at(i, n);
    mor_t left_id = ccat.identity(rel.left.on_object(top));
    for (mor_t v : t.morphisms_from(top)) {
      if (rel.left.on_morphism(v) != left_id) continue;
      if (i > 0 && rel.right.on_morphism(v) != bstep) continue;
      mor_t saved_b = bstep;
      if (i == 0) bstep = rel.right.on_morphism(v);
      vsteps[i] = v;
      if (i == 0) {
        dfs(1);
      } else {
        obj_t src = t.target(vsteps[i - 1]);
        obj_t dst = t.target(v);
        mor_t astep = rel.left.on_morphism(g.h(i - 1, n));
        mor_t right_id = dcat.identity(dcat.target(bstep));
        mor_t want = t.compose(v, g.h(i - 1, n));
        for (mor_t h : t.hom(src, dst)) {
          if (rel.left.on_morphism(h) != astep) continue;
          if (rel.right.on_morphism(h) != right_id) continue;
          if (t.compose(h, vsteps[i - 1]) != want) continue;
          hsteps[i - 1] = h;
          dfs(i + 1);
        }
      }
      bstep = saved_b;
    }
  };
  dfs(0);
  return out;
}

}  // namespace

int RectangleNerve::count(int m, int n) const {
  if (m < 0 || m > bis_.htruncation() || n < 0 || n > bis_.vtruncation())
    return 0;
  return static_cast<int>(grids_[m][n].size());
}

RectangleNerve RectangleNerve::build(const CatRelation& rel, int mtrunc,
                                     int ntrunc) {
  RectangleNerve out;
  out.rel_ = rel;
  out.grids_.assign(mtrunc + 1, {});
  for (int m = 0; m <= mtrunc; ++m) {
    out.grids_[m].resize(ntrunc + 1);
    out.grids_[m][0] = base_rows(rel, m, nullptr);
    for (int n = 1; n <= ntrunc; ++n)
      for (const RectangleSimplex& g : out.grids_[m][n - 1]) {
        std::vector<RectangleSimplex> ext = extend_rows(rel, g);
        std::move(ext.begin(), ext.end(), std::back_inserter(out.grids_[m][n]));
      }
  }
  BisimplicialSetBuilder b(mtrunc, ntrunc);
  for (int m = 0; m <= mtrunc; ++m)
    for (int n = 0; n <= ntrunc; ++n)
      for (const RectangleSimplex& g : out.grids_[m][n])
        b.add_simplex(m, n, g.label());
  const FinCategory& t = *rel.total;
  for (int m = 0; m <= mtrunc; ++m)
    for (int n = 0; n <= ntrunc; ++n)
      for (std::size_t i = 0; i < out.grids_[m][n].size(); ++i) {
        const RectangleSimplex& g = out.grids_[m][n][i];
        int ii = static_cast<int>(i);
        for (int k = 0; m >= 1 && k <= m; ++k)
          b.set_hface(m, n, ii, k,
                      apply_grid(t, g, delta(k, m), iota(n)).label());
        for (int k = 0; n >= 1 && k <= n; ++k)
          b.set_vface(m, n, ii, k,
                      apply_grid(t, g, iota(m), delta(k, n)).label());
        if (m + 1 <= mtrunc)
          for (int k = 0; k <= m; ++k)
            b.set_hdegeneracy(m, n, ii, k,
                              apply_grid(t, g, sigma(k, m), iota(n)).label());
        if (n + 1 <= ntrunc)
          for (int k = 0; k <= n; ++k)
            b.set_vdegeneracy(m, n, ii, k,
                              apply_grid(t, g, iota(m), sigma(k, n)).label());
      }
  out.bis_ = std::move(b).build();
  return out;
}

DowkerNerveData build_dowker_nerve(const CatRelation& rel, int truncation) {
  DowkerNerveData out;
  out.chains.resize(truncation + 1);
  const FinCategory& c = *rel.left.cod;
  SimplicialSetBuilder b(truncation);
  for (int m = 0; m <= truncation; ++m) {
    std::unordered_map<std::string, int> seen;
    for (const RectangleSimplex& g : base_rows(rel, m, nullptr)) {
      Chain a = grid_left_chain(rel, g);
      std::string l = a.label();
      if (seen.emplace(l, 1).second) out.chains[m].push_back(a);
    }
    // store in the chain enumeration order of the codomain nerve
    std::sort(out.chains[m].begin(), out.chains[m].end(),
              [](const Chain& x, const Chain& y) {
                return std::tie(x.base, x.arrows) < std::tie(y.base, y.arrows);
              });
    for (const Chain& a : out.chains[m]) b.add_simplex(m, a.label());
  }
  for (int m = 0; m <= truncation; ++m)
    for (std::size_t i = 0; i < out.chains[m].size(); ++i) {
      const Chain& a = out.chains[m][i];
      for (int k = 0; m >= 1 && k <= m; ++k)
        b.set_face(m, static_cast<int>(i), k, chain_face(c, a, k).label());
      if (m + 1 <= truncation)
        for (int k = 0; k <= m; ++k)
          b.set_degeneracy(m, static_cast<int>(i), k,
                           chain_degeneracy(c, a, k).label());
    }
  out.sset = std::move(b).build();
  return out;
}

SimplicialSet dowker_nerve(const CatRelation& rel, int truncation) {
  return build_dowker_nerve(rel, truncation).sset;
}

SimplicialMap diagonal_projection(const RectangleNerve& er,
                                  const SimplicialSet& dr) {
  SimplicialSet diag = diagonal(er.bis());
  return make_simplicial_map(std::move(diag), dr, [&](int n, int i) {
    return er.left_chain(n, n, i).label();
  });
}

SimplicialMap dowker_nerve_map(const RelMorphism& f, const SimplicialSet& src,
                               const SimplicialSet& tgt) {
  DowkerNerveData data = build_dowker_nerve(f.source, src.truncation());
  if (!(data.sset == src))
    throw validation_error("source is not the Dowker nerve of the relation");
  return make_simplicial_map(src, tgt, [&](int n, int i) {
    return map_chain(f.f1, data.chains[n][i]).label();
  });
}

SimplicialMap diagonal_rectangle_map(const RelMorphism& f,
                                     const RectangleNerve& src,
                                     const RectangleNerve& tgt) {
  return make_simplicial_map(
      diagonal(src.bis()), diagonal(tgt.bis()), [&](int n, int i) {
        return map_grid(f, src.grid(n, n, i)).label();
      });
}

bool projection_naturality_holds(const RelMorphism& f,
                                 const RectangleNerve& src,
                                 const RectangleNerve& tgt) {
  for (int m = 0; m <= src.bis().htruncation(); ++m)
    for (int n = 0; n <= src.bis().vtruncation(); ++n)
      for (int i = 0; i < src.count(m, n); ++i) {
        RectangleSimplex img = map_grid(f, src.grid(m, n, i));
        if (tgt.bis().index_of(m, n, img.label()) < 0)
          throw validation_error(
              "mapped rectangle simplex missing from the target nerve");
        Chain lhs = grid_left_chain(tgt.relation(), img);
        Chain rhs = map_chain(f.f1, src.left_chain(m, n, i));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

RectangleTranspose rectangle_transpose_iso(const RectangleNerve& er,
                                           const RectangleNerve& ert) {
  if (!relation_equal(transpose(er.relation()), ert.relation()))
    throw validation_error("second nerve must belong to the transpose");
  const int mt = er.bis().htruncation(), nt = er.bis().vtruncation();
  if (ert.bis().htruncation() < nt || ert.bis().vtruncation() < mt)
    throw validation_error("transpose nerve is not stored deep enough");
  RectangleTranspose out;
  out.bijective = true;
  out.map.assign(mt + 1, {});
  for (int m = 0; m <= mt; ++m) {
    out.map[m].resize(nt + 1);
    for (int n = 0; n <= nt; ++n) {
      out.map[m][n].resize(er.count(m, n));
      std::vector<char> hit(ert.count(n, m), 0);
      for (int i = 0; i < er.count(m, n); ++i) {
        RectangleSimplex tg = transpose_grid(er.grid(m, n, i));
        int j = ert.bis().index_of(n, m, tg.label());
        if (j < 0)
          throw validation_error(
              "transposed grid missing from the transpose nerve");
        out.map[m][n][i] = j;
        if (hit[j]) out.bijective = false;
        hit[j] = 1;
      }
      if (er.count(m, n) != ert.count(n, m)) out.bijective = false;
    }
  }
  // Compatibility with the operator families, on all stored bidegrees.
  for (int m = 0; m <= mt; ++m)
    for (int n = 0; n <= nt; ++n)
      for (int i = 0; i < er.count(m, n); ++i) {
        int j = out.map[m][n][i];
        for (int k = 0; m >= 1 && k <= m; ++k)
          if (out.map[m - 1][n][er.bis().hface(m, n, i, k)] !=
              ert.bis().vface(n, m, j, k))
            throw validation_error(
                "grid transposition does not intertwine horizontal faces");
        for (int k = 0; n >= 1 && k <= n; ++k)
          if (out.map[m][n - 1][er.bis().vface(m, n, i, k)] !=
              ert.bis().hface(n, m, j, k))
            throw validation_error(
                "grid transposition does not intertwine vertical faces");
        if (m + 1 <= mt)
          for (int k = 0; k <= m; ++k)
            if (out.map[m + 1][n][er.bis().hdegeneracy(m, n, i, k)] !=
                ert.bis().vdegeneracy(n, m, j, k))
              throw validation_error(
                  "grid transposition does not intertwine horizontal "
                  "degeneracies");
        if (n + 1 <= nt)
          for (int k = 0; k <= n; ++k)
            if (out.map[m][n + 1][er.bis().vdegeneracy(m, n, i, k)] !=
                ert.bis().hdegeneracy(n, m, j, k))
              throw validation_error(
                  "grid transposition does not intertwine vertical "
                  "degeneracies");
      }
  return out;
}

SimplicialMap diagonal_transpose_iso(const RectangleNerve& er,
                                     const RectangleNerve& ert) {
  return make_simplicial_map(
      diagonal(er.bis()), diagonal(ert.bis()), [&](int n, int i) {
        return transpose_grid(er.grid(n, n, i)).label();
      });
}

SimplicialSet fiber(const CatRelation& rel, const Chain& a, int truncation) {
  const int m = a.length();
  std::vector<std::vector<RectangleSimplex>> levels(truncation + 1);
  levels[0] = base_rows(rel, m, &a);
  for (int n = 1; n <= truncation; ++n)
    for (const RectangleSimplex& g : levels[n - 1]) {
      std::vector<RectangleSimplex> ext = extend_rows(rel, g);
      std::move(ext.begin(), ext.end(), std::back_inserter(levels[n]));
    }
  SimplicialSetBuilder b(truncation);
  for (int n = 0; n <= truncation; ++n)
    for (const RectangleSimplex& g : levels[n]) b.add_simplex(n, g.label());
  const FinCategory& t = *rel.total;
  for (int n = 0; n <= truncation; ++n)
    for (std::size_t i = 0; i < levels[n].size(); ++i) {
      const RectangleSimplex& g = levels[n][i];
      int ii = static_cast<int>(i);
      for (int k = 0; n >= 1 && k <= n; ++k)
        b.set_face(n, ii, k, apply_grid(t, g, iota(m), delta(k, n)).label());
      if (n + 1 <= truncation)
        for (int k = 0; k <= n; ++k)
          b.set_degeneracy(n, ii, k,
                           apply_grid(t, g, iota(m), sigma(k, n)).label());
    }
  return std::move(b).build();
}

SimplicialSet fiber(const CatRelation& rel, const Functor& a, int truncation) {
  return fiber(rel, functor_chain(a), truncation);
}

const char* to_string(DowkerStatus s) {
  switch (s) {
    case DowkerStatus::certified_dowker: return "certified-dowker";
    case DowkerStatus::acyclic_evidence: return "acyclic-evidence";
    case DowkerStatus::not_dowker: return "not-dowker";
    case DowkerStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string object_set_name(const FinCategory& c, uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (obj_t o = 0; o < c.object_count(); ++o)
    if (mask >> o & 1) {
      if (!first) out += ",";
      out += c.object_name(o);
      first = false;
    }
  return out + "}";
}

// Object sets realizable as images of chains: walks in the arrow graph,
// tracked as (visited set, endpoint) states.
std::optional<std::vector<uint64_t>> realizable_image_sets(
    const FinCategory& c, std::size_t state_cap) {
  if (c.object_count() > 64) return std::nullopt;
  std::map<std::pair<uint64_t, obj_t>, char> seen;
  std::vector<std::pair<uint64_t, obj_t>> queue;
  for (obj_t x = 0; x < c.object_count(); ++x) {
    auto st = std::make_pair(uint64_t{1} << x, x);
    seen.emplace(st, 1);
    queue.push_back(st);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue.size() > state_cap) return std::nullopt;
    auto [mask, at] = queue[head];
    for (mor_t f : c.morphisms_from(at)) {
      obj_t to = c.target(f);
      auto st = std::make_pair(mask | (uint64_t{1} << to), to);
      if (seen.emplace(st, 1).second) queue.push_back(st);
    }
  }
  std::vector<uint64_t> sets;
  for (const auto& [st, _] : seen) sets.push_back(st.first);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

DowkerVerdict run_initial_terminal(const CatRelation& rel,
                                   const DowkerBounds& bounds) {
  DowkerVerdict out;
  out.strategy = DowkerStrategy::initial_terminal;
  out.bounds = bounds;
  if (!is_full_subcategory_relation(rel)) {
    out.status = DowkerStatus::inconclusive;
    out.detail =
        "the initial/terminal certificate applies only to full-subcategory "
        "relations";
    return out;
  }
  const FinCategory& c = *rel.left.cod;
  const FinCategory& d = *rel.right.cod;
  auto sets = realizable_image_sets(c, bounds.state_cap);
  if (!sets) {
    out.status = DowkerStatus::inconclusive;
    out.detail = "image-set search exhausted its state budget";
    return out;
  }
  // membership of ambient pairs in the total
  std::vector<std::vector<char>> pair_in(c.object_count(),
                                         std::vector<char>(d.object_count(), 0));
  for (obj_t x = 0; x < rel.total->object_count(); ++x)
    pair_in[rel.left.on_object(x)][rel.right.on_object(x)] = 1;
  bool all_ok = true;
  for (uint64_t mask : *sets) {
    FiberReport rep;
    rep.chain_label = object_set_name(c, mask);
    std::vector<obj_t> keep;
    for (obj_t y = 0; y < d.object_count(); ++y) {
      bool ok = true;
      for (obj_t o = 0; o < c.object_count() && ok; ++o)
        if (mask >> o & 1) ok = pair_in[o][y] == 1;
      if (ok) keep.push_back(y);
    }
    if (keep.empty()) {
      rep.empty = true;
      rep.note = "empty fiber";
      out.reports.push_back(std::move(rep));
      continue;
    }
    Subcategory sub = full_subcategory(rel.right.cod, keep);
    std::optional<obj_t> initial = find_initial_object(*sub.cat);
    std::optional<obj_t> terminal =
        initial ? std::nullopt : find_terminal_object(*sub.cat);
    if (initial)
      rep.note = "initial object " + sub.cat->object_name(*initial);
    else if (terminal)
      rep.note = "terminal object " + sub.cat->object_name(*terminal);
    else {
      rep.ok = false;
      rep.note = "no initial or terminal object";
      all_ok = false;
    }
    out.reports.push_back(std::move(rep));
  }
  if (all_ok) {
    out.status = DowkerStatus::certified_dowker;
    out.detail = "every realizable image set has an initial or terminal "
                 "object in its fiber category";
  } else {
    out.status = DowkerStatus::inconclusive;
    for (std::size_t i = 0; i < out.reports.size(); ++i)
      if (!out.reports[i].ok) {
        out.witness = i;
        break;
      }
    out.detail = "certificate fails at " + out.reports[*out.witness].chain_label +
                 "; the fiber may still be contractible";
  }
  return out;
}

DowkerVerdict run_acyclic(const CatRelation& rel, const DowkerBounds& bounds) {
  DowkerVerdict out;
  out.strategy = DowkerStrategy::acyclic;
  out.bounds = bounds;
  if (bounds.fiber_truncation < 1) {
    out.status = DowkerStatus::inconclusive;
    out.detail = "fiber truncation must be at least 1";
    return out;
  }
  DowkerNerveData dr = build_dowker_nerve(rel, bounds.max_chain_length);
  std::vector<int> degrees;
  for (int k = 0; k < bounds.fiber_truncation; ++k) degrees.push_back(k);
  for (int m = 0; m <= bounds.max_chain_length; ++m)
    for (const Chain& a : dr.chains[m]) {
      FiberReport rep;
      rep.chain_label = a.label();
      rep.chain_length = m;
      SimplicialSet fib = fiber(rel, a, bounds.fiber_truncation);
      ChainComplex cc =
          normalized_chain_complex(fib, bounds.fiber_truncation - 1);
      for (const HomologyGroup& g : homology(cc, degrees, /*reduced=*/true)) {
        rep.reduced_betti.push_back(g.betti);
        if (g.betti != 0 || !g.torsion.empty()) rep.ok = false;
      }
      if (!rep.ok) {
        out.reports.push_back(std::move(rep));
        out.witness = out.reports.size() - 1;
        out.status = DowkerStatus::not_dowker;
        out.detail = "fiber over " + out.reports.back().chain_label +
                     " has nonvanishing reduced homology";
        return out;
      }
      out.reports.push_back(std::move(rep));
    }
  out.status = DowkerStatus::acyclic_evidence;
  out.detail = "all fibers over chains of length <= " +
               std::to_string(bounds.max_chain_length) +
               " are acyclic in degrees < " +
               std::to_string(bounds.fiber_truncation);
  return out;
}

}  // namespace

DowkerVerdict check_dowker(const CatRelation& rel, DowkerStrategy strategy,
                           DowkerBounds bounds) {
  switch (strategy) {
    case DowkerStrategy::initial_terminal:
      return run_initial_terminal(rel, bounds);
    case DowkerStrategy::acyclic:
      return run_acyclic(rel, bounds);
    case DowkerStrategy::both: {
      DowkerVerdict cert = run_initial_terminal(rel, bounds);
      if (cert.status == DowkerStatus::certified_dowker) {
        cert.strategy = DowkerStrategy::both;
        return cert;
      }
      DowkerVerdict ev = run_acyclic(rel, bounds);
      ev.strategy = DowkerStrategy::both;
      if (!cert.detail.empty())
        ev.detail = cert.detail + "; " + ev.detail;
      return ev;
    }
  }
  throw validation_error("unknown strategy");
}

}  // namespace dowker
