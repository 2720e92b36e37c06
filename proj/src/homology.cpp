#include "dowker/homology.hpp"

#include <algorithm>
#include <sstream>

namespace dowker {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols != o.rows) throw validation_error("matrix product shape mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Int& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw validation_error("matrix-vector shape mismatch");
  std::vector<Int> r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

namespace {

// Elementary operations on d, mirrored into the transforms so that
// u * original * v = d stays true, with uinv, vinv their inverses.
struct SmithState {
  IntMatrix d, u, uinv, v, vinv;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i += q * row j
  void row_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(i, c) += q * d.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += q * u.at(j, c);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= q * uinv.at(r, i);
  }
  // col i += q * col j
  void col_add(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, i) += q * d.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) += q * v.at(r, j);
    for (int c = 0; c < vinv.cols; ++c) vinv.at(j, c) -= q * vinv.at(i, c);
  }
  void row_negate(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
};

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient minimizing |a - q*b|.
Int nearest_div(const Int& a, const Int& b) {
  Int q = floordiv(a, b);
  Int r = a - q * b;
  if (2 * r > abs(b)) ++q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const int rows = m.rows, cols = m.cols;
  SmithState s{std::move(m), IntMatrix::identity(rows),
               IntMatrix::identity(rows), IntMatrix::identity(cols),
               IntMatrix::identity(cols)};
  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    // smallest nonzero entry of the remaining submatrix as pivot
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s.d.at(i, j) != 0 &&
            (pi < 0 || abs(s.d.at(i, j)) < abs(s.d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (s.d.at(i, t) == 0) continue;
        Int q = nearest_div(s.d.at(i, t), s.d.at(t, t));
        s.row_add(i, t, -q);
        if (s.d.at(i, t) != 0) {
          s.row_swap(t, i);  // strictly smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (s.d.at(t, j) == 0) continue;
        Int q = nearest_div(s.d.at(t, j), s.d.at(t, t));
        s.col_add(j, t, -q);
        if (s.d.at(t, j) != 0) {
          s.col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every remaining entry before moving on
      int bi = -1;
      for (int i = t + 1; i < rows && bi < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (s.d.at(i, j) % s.d.at(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      s.row_add(t, bi, 1);
    }
    if (s.d.at(t, t) < 0) s.row_negate(t);
  }
  SmithForm out;
  out.u = std::move(s.u);
  out.uinv = std::move(s.uinv);
  out.v = std::move(s.v);
  out.vinv = std::move(s.vinv);
  out.d = std::move(s.d);
  for (int t = 0; t < steps; ++t)
    if (out.d.at(t, t) != 0) {
      out.invariant_factors.push_back(out.d.at(t, t));
      ++out.rank;
    }
  return out;
}

std::string to_string(const HomologyGroup& g) {
  std::ostringstream os;
  os << "H_" << g.degree << " = Z^" << g.betti;
  for (const Int& t : g.torsion) os << " + Z/" << t;
  return os.str();
}

void ChainComplex::verify_dd_zero() const {
  for (int n = 2; n < static_cast<int>(boundary.size()); ++n) {
    if (!boundary[n - 1].mul(boundary[n]).is_zero())
      throw validation_error("boundary squared is nonzero in degree " +
                             std::to_string(n));
  }
}

ChainComplex normalized_chain_complex(const SimplicialSet& x, int maxdeg) {
  if (x.truncation() < maxdeg + 1)
    throw validation_error(
        "insufficient truncation: need " + std::to_string(maxdeg + 1) +
        ", have " + std::to_string(x.truncation()));
  ChainComplex c;
  c.maxdeg = maxdeg;
  c.basis.resize(maxdeg + 2);
  c.boundary.resize(maxdeg + 2);
  std::vector<std::vector<int>> nondeg(maxdeg + 2);
  std::vector<std::vector<int>> pos(maxdeg + 2);
  for (int n = 0; n <= maxdeg + 1; ++n) {
    nondeg[n] = x.nondegenerate(n);
    pos[n].assign(x.size(n), -1);
    for (std::size_t i = 0; i < nondeg[n].size(); ++i) {
      pos[n][nondeg[n][i]] = static_cast<int>(i);
      c.basis[n].push_back(x.label(n, nondeg[n][i]));
    }
  }
  c.boundary[0] = IntMatrix(0, c.dim(0));
  for (int n = 1; n <= maxdeg + 1; ++n) {
    IntMatrix b(c.dim(n - 1), c.dim(n));
    for (std::size_t j = 0; j < nondeg[n].size(); ++j) {
      int simplex = nondeg[n][j];
      for (int k = 0; k <= n; ++k) {
        int f = x.face(n, simplex, k);
        int p = pos[n - 1][f];
        if (p < 0) continue;  // degenerate faces vanish in normalized chains
        b.at(p, static_cast<int>(j)) += (k % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary[n] = std::move(b);
  }
  c.verify_dd_zero();
  return c;
}

HomologyCoordinates::HomologyCoordinates(const ChainComplex& c, int degree,
                                         bool reduced)
    : degree_(degree), dim_(c.dim(degree)) {
  if (degree < 0 || degree > c.maxdeg)
    throw validation_error("homology degree outside certified range");
  IntMatrix a = degree == 0 ? IntMatrix(0, dim_) : c.boundary[degree];
  if (reduced && degree == 0) {
    a = IntMatrix(1, dim_);
    for (int j = 0; j < dim_; ++j) a.at(0, j) = 1;
  }
  SmithForm asnf = smith_normal_form(std::move(a));
  kappa_ = dim_ - asnf.rank;
  q_ = IntMatrix(kappa_, dim_);
  for (int i = 0; i < kappa_; ++i)
    for (int j = 0; j < dim_; ++j)
      q_.at(i, j) = asnf.vinv.at(asnf.rank + i, j);
  gens_ = IntMatrix(dim_, kappa_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < kappa_; ++j)
      gens_.at(i, j) = asnf.v.at(i, asnf.rank + j);
  msnf_ = smith_normal_form(q_.mul(c.boundary[degree + 1]));
}

HomologyGroup HomologyCoordinates::group() const {
  HomologyGroup g;
  g.degree = degree_;
  g.betti = kappa_ - msnf_.rank;
  for (const Int& f : msnf_.invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::vector<Int> HomologyCoordinates::class_of(
    const std::vector<Int>& cycle) const {
  std::vector<Int> w = msnf_.u.apply(q_.apply(cycle));
  std::vector<Int> out;
  for (int i = 0; i < kappa_; ++i) {
    if (i < msnf_.rank) {
      const Int& f = msnf_.invariant_factors[i];
      if (f == 1) continue;
      Int r = w[i] % f;
      if (r < 0) r += f;
      out.push_back(r);
    } else {
      out.push_back(w[i]);
    }
  }
  return out;
}

std::vector<std::vector<Int>> HomologyCoordinates::cycle_generators() const {
  std::vector<std::vector<Int>> out;
  for (int j = 0; j < kappa_; ++j) {
    std::vector<Int> g(dim_);
    for (int i = 0; i < dim_; ++i) g[i] = gens_.at(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& c,
                                    const std::vector<int>& degrees,
                                    bool reduced) {
  std::vector<HomologyGroup> out;
  for (int k : degrees) out.push_back(HomologyCoordinates(c, k, reduced).group());
  return out;
}

std::vector<HomologyGroup> homology(const SimplicialSet& x,
                                    const std::vector<int>& degrees,
                                    bool reduced) {
  int maxdeg = 0;
  for (int k : degrees) maxdeg = std::max(maxdeg, k);
  return homology(normalized_chain_complex(x, maxdeg), degrees, reduced);
}

void ChainMap::validate() const {
  int top = std::min(source.maxdeg, target.maxdeg) + 1;
  if (static_cast<int>(mat.size()) < top + 1)
    throw validation_error("chain map is missing degrees");
  for (int n = 0; n <= top; ++n)
    if (mat[n].rows != target.dim(n) || mat[n].cols != source.dim(n))
      throw validation_error("chain map matrix shape mismatch in degree " +
                             std::to_string(n));
  for (int n = 1; n <= top; ++n) {
    IntMatrix lhs = mat[n - 1].mul(source.boundary[n]);
    IntMatrix rhs = target.boundary[n].mul(mat[n]);
    if (!(lhs == rhs))
      throw validation_error(
          "chain map does not commute with the boundary in degree " +
          std::to_string(n));
  }
}

ChainMap induced_chain_map(const SimplicialMap& f, int maxdeg) {
  ChainMap out;
  out.source = normalized_chain_complex(f.source, maxdeg);
  out.target = normalized_chain_complex(f.target, maxdeg);
  out.mat.resize(maxdeg + 2);
  for (int n = 0; n <= maxdeg + 1; ++n) {
    std::vector<int> spos(f.source.size(n), -1), tpos(f.target.size(n), -1);
    {
      std::vector<int> snd = f.source.nondegenerate(n);
      for (std::size_t i = 0; i < snd.size(); ++i)
        spos[snd[i]] = static_cast<int>(i);
      std::vector<int> tnd = f.target.nondegenerate(n);
      for (std::size_t i = 0; i < tnd.size(); ++i)
        tpos[tnd[i]] = static_cast<int>(i);
    }
    IntMatrix m(out.target.dim(n), out.source.dim(n));
    for (int i = 0; i < f.source.size(n); ++i) {
      if (spos[i] < 0) continue;
      int img = f.apply(n, i);
      if (tpos[img] < 0) continue;  // degenerate image vanishes
      m.at(tpos[img], spos[i]) = 1;
    }
    out.mat[n] = std::move(m);
  }
  out.validate();
  return out;
}

ChainMap identity_chain_map(const ChainComplex& c) {
  ChainMap out;
  out.source = c;
  out.target = c;
  out.mat.resize(c.maxdeg + 2);
  for (int n = 0; n <= c.maxdeg + 1; ++n)
    out.mat[n] = IntMatrix::identity(c.dim(n));
  return out;
}

namespace {

ChainComplex mapping_cone(const ChainMap& f, int maxdeg) {
  // cone_n = source_{n-1} (+) target_n, boundary [[-d, 0], [f, d]]
  ChainComplex cone;
  cone.maxdeg = maxdeg;
  cone.basis.resize(maxdeg + 2);
  cone.boundary.resize(maxdeg + 2);
  auto sdim = [&](int n) { return n >= 0 ? f.source.dim(n) : 0; };
  for (int n = 0; n <= maxdeg + 1; ++n) {
    for (int i = 0; i < sdim(n - 1); ++i)
      cone.basis[n].push_back("s." + f.source.basis[n - 1][i]);
    for (int i = 0; i < f.target.dim(n); ++i)
      cone.basis[n].push_back("t." + f.target.basis[n][i]);
  }
  cone.boundary[0] = IntMatrix(0, cone.dim(0));
  for (int n = 1; n <= maxdeg + 1; ++n) {
    IntMatrix b(cone.dim(n - 1), cone.dim(n));
    const int off_row = sdim(n - 2);
    for (int j = 0; j < sdim(n - 1); ++j) {
      if (n - 1 >= 1) {
        const IntMatrix& sb = f.source.boundary[n - 1];
        for (int i = 0; i < sb.rows; ++i)
          if (sb.at(i, j) != 0) b.at(i, j) = -sb.at(i, j);
      }
      const IntMatrix& fm = f.mat[n - 1];
      for (int i = 0; i < fm.rows; ++i)
        if (fm.at(i, j) != 0) b.at(off_row + i, j) = fm.at(i, j);
    }
    const IntMatrix& tb = f.target.boundary[n];
    for (int j = 0; j < f.target.dim(n); ++j)
      for (int i = 0; i < tb.rows; ++i)
        if (tb.at(i, j) != 0) b.at(off_row + i, sdim(n - 1) + j) = tb.at(i, j);
    cone.boundary[n] = std::move(b);
  }
  cone.verify_dd_zero();
  return cone;
}

}  // namespace

QuasiIsoVerdict is_quasi_iso(const ChainMap& f, int max_degree) {
  QuasiIsoVerdict out;
  out.max_degree = max_degree;
  if (f.source.maxdeg < max_degree || f.target.maxdeg < max_degree)
    throw validation_error("complexes not certified through degree " +
                           std::to_string(max_degree));
  ChainComplex cone = mapping_cone(f, max_degree);
  bool cone_ok = true;
  for (int k = 0; k <= max_degree; ++k) {
    HomologyGroup g = HomologyCoordinates(cone, k).group();
    if (g.betti != 0 || !g.torsion.empty()) cone_ok = false;
    out.cone_homology.push_back(g);
  }
  for (int k = 0; k <= max_degree; ++k) {
    out.source_homology.push_back(HomologyCoordinates(f.source, k).group());
    out.target_homology.push_back(HomologyCoordinates(f.target, k).group());
  }
  bool top_match =
      out.source_homology[max_degree].betti ==
          out.target_homology[max_degree].betti &&
      out.source_homology[max_degree].torsion ==
          out.target_homology[max_degree].torsion;
  out.certified = cone_ok && top_match;
  std::ostringstream os;
  if (!cone_ok) os << "mapping cone has nonvanishing homology in range; ";
  if (!top_match)
    os << "homology groups differ in degree " << max_degree << "; ";
  if (out.certified) os << "cone acyclic through degree " << max_degree;
  out.detail = os.str();
  return out;
}

bool homology_maps_equal(const ChainMap& f, const ChainMap& g, int max_degree) {
  if (!(f.source == g.source) || !(g.target == f.target))
    throw validation_error("homology map comparison needs equal endpoints");
  if (f.source.maxdeg < max_degree || f.target.maxdeg < max_degree)
    throw validation_error("complexes not certified through degree " +
                           std::to_string(max_degree));
  for (int k = 0; k <= max_degree; ++k) {
    HomologyCoordinates src(f.source, k);
    HomologyCoordinates tgt(f.target, k);
    for (const std::vector<Int>& z : src.cycle_generators()) {
      std::vector<Int> fz = f.mat[k].apply(z);
      std::vector<Int> gz = g.mat[k].apply(z);
      if (tgt.class_of(fz) != tgt.class_of(gz)) return false;
    }
  }
  return true;
}

}  // namespace dowker
