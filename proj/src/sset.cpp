#include "dowker/sset.hpp"

#include <algorithm>
#include <sstream>

namespace dowker {

namespace {

std::string op_witness(const char* op, int n, int i, int k) {
  std::ostringstream os;
  os << op << "_" << k << " at simplex " << i << " of dimension " << n;
  return os.str();
}

}  // namespace

int SimplicialSet::size(int n) const {
  if (n < 0 || n > trunc_) return 0;
  return static_cast<int>(labels_[n].size());
}

int SimplicialSet::index_of(int n, const std::string& l) const {
  if (n < 0 || n > trunc_) return -1;
  auto it = index_[n].find(l);
  return it == index_[n].end() ? -1 : it->second;
}

std::optional<std::pair<int, int>> SimplicialSet::degeneracy_witness(
    int n, int i) const {
  if (n == 0) return std::nullopt;
  for (int y = 0; y < size(n - 1); ++y)
    for (int k = 0; k <= n - 1; ++k)
      if (degens_[n - 1][y][k] == i) return std::make_pair(k, y);
  return std::nullopt;
}

std::vector<int> SimplicialSet::nondegenerate(int n) const {
  std::vector<int> out;
  for (int i = 0; i < size(n); ++i)
    if (!is_degenerate(n, i)) out.push_back(i);
  return out;
}

void SimplicialSet::validate() const {
  for (int n = 0; n <= trunc_; ++n) {
    for (int i = 0; i < size(n); ++i) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int k = 0; k < j; ++k)
            if (faces_[n - 1][faces_[n][i][j]][k] !=
                faces_[n - 1][faces_[n][i][k]][j - 1])
              throw validation_error("face identity fails: " +
                                     op_witness("d", n, i, j) + " vs d_" +
                                     std::to_string(k));
      if (has_degeneracies(n)) {
        // s_i s_j = s_{j+1} s_i for i <= j (checked at n+2 <= trunc)
        if (n + 2 <= trunc_)
          for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= j; ++k)
              if (degens_[n + 1][degens_[n][i][j]][k] !=
                  degens_[n + 1][degens_[n][i][k]][j + 1])
                throw validation_error("degeneracy identity fails: " +
                                       op_witness("s", n, i, j));
        // mixed identities d_k s_j
        for (int j = 0; j <= n; ++j) {
          int sj = degens_[n][i][j];
          for (int k = 0; k <= n + 1; ++k) {
            int dk_sj = faces_[n + 1][sj][k];
            int want;
            if (k < j)
              want = n >= 1 ? degens_[n - 1][faces_[n][i][k]][j - 1] : -2;
            else if (k == j || k == j + 1)
              want = i;
            else
              want = n >= 1 ? degens_[n - 1][faces_[n][i][k - 1]][j] : -2;
            if (want != -2 && dk_sj != want)
              throw validation_error("mixed identity fails: d_" +
                                     std::to_string(k) + " s_" +
                                     std::to_string(j) + " at simplex " +
                                     std::to_string(i) + " of dimension " +
                                     std::to_string(n));
          }
        }
      }
    }
  }
}

SimplicialSetBuilder::SimplicialSetBuilder(int truncation) {
  if (truncation < 0)
    throw validation_error("truncation must be nonnegative");
  s_.trunc_ = truncation;
  s_.labels_.resize(truncation + 1);
  s_.index_.resize(truncation + 1);
  s_.faces_.resize(truncation + 1);
  s_.degens_.resize(truncation + 1);
}

int SimplicialSetBuilder::add_simplex(int n, std::string label) {
  if (n < 0 || n > s_.trunc_)
    throw validation_error("simplex dimension out of range");
  int idx = static_cast<int>(s_.labels_[n].size());
  if (!s_.index_[n].emplace(label, idx).second)
    throw validation_error("duplicate simplex label " + label);
  s_.labels_[n].push_back(std::move(label));
  s_.faces_[n].emplace_back(n == 0 ? 0 : n + 1, -1);
  s_.degens_[n].emplace_back(n + 1 <= s_.trunc_ ? n + 1 : 0, -1);
  return idx;
}

void SimplicialSetBuilder::set_face(int n, int i, int k,
                                    const std::string& target) {
  int t = s_.index_of(n - 1, target);
  if (t < 0)
    throw validation_error("face target not stored: " + target);
  s_.faces_[n][i][k] = t;
}

void SimplicialSetBuilder::set_degeneracy(int n, int i, int k,
                                          const std::string& target) {
  int t = s_.index_of(n + 1, target);
  if (t < 0)
    throw validation_error("degeneracy target not stored: " + target);
  s_.degens_[n][i][k] = t;
}

SimplicialSet SimplicialSetBuilder::build(Validate check) && {
  for (int n = 0; n <= s_.trunc_; ++n)
    for (std::size_t i = 0; i < s_.labels_[n].size(); ++i) {
      for (int v : s_.faces_[n][i])
        if (v < 0)
          throw validation_error("unset face at " + s_.labels_[n][i]);
      for (int v : s_.degens_[n][i])
        if (v < 0)
          throw validation_error("unset degeneracy at " + s_.labels_[n][i]);
    }
  if (check == Validate::yes) s_.validate();
  return std::move(s_);
}

int BisimplicialSet::size(int m, int n) const {
  if (m < 0 || m > mtrunc_ || n < 0 || n > ntrunc_) return 0;
  return static_cast<int>(labels_[m][n].size());
}

int BisimplicialSet::index_of(int m, int n, const std::string& l) const {
  if (m < 0 || m > mtrunc_ || n < 0 || n > ntrunc_) return -1;
  auto it = index_[m][n].find(l);
  return it == index_[m][n].end() ? -1 : it->second;
}

void BisimplicialSet::validate() const {
  for (int m = 0; m <= mtrunc_; ++m)
    for (int n = 0; n <= ntrunc_; ++n)
      for (int i = 0; i < size(m, n); ++i) {
        // horizontal face identities
        if (m >= 2)
          for (int j = 1; j <= m; ++j)
            for (int k = 0; k < j; ++k)
              if (hfaces_[m - 1][n][hfaces_[m][n][i][j]][k] !=
                  hfaces_[m - 1][n][hfaces_[m][n][i][k]][j - 1])
                throw validation_error("horizontal face identity fails");
        if (n >= 2)
          for (int j = 1; j <= n; ++j)
            for (int k = 0; k < j; ++k)
              if (vfaces_[m][n - 1][vfaces_[m][n][i][j]][k] !=
                  vfaces_[m][n - 1][vfaces_[m][n][i][k]][j - 1])
                throw validation_error("vertical face identity fails");
        // h/v faces commute
        if (m >= 1 && n >= 1)
          for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= n; ++b)
              if (vfaces_[m - 1][n][hfaces_[m][n][i][a]][b] !=
                  hfaces_[m][n - 1][vfaces_[m][n][i][b]][a])
                throw validation_error(
                    "horizontal and vertical faces do not commute");
        // degeneracy cross-checks where stored
        if (m + 1 <= mtrunc_ && n >= 1)
          for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= n; ++b)
              if (vfaces_[m + 1][n][hdegens_[m][n][i][a]][b] !=
                  hdegens_[m][n - 1][vfaces_[m][n][i][b]][a])
                throw validation_error(
                    "horizontal degeneracy does not commute with vertical "
                    "face");
        if (n + 1 <= ntrunc_ && m >= 1)
          for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= n; ++b)
              if (hfaces_[m][n + 1][vdegens_[m][n][i][b]][a] !=
                  vdegens_[m - 1][n][hfaces_[m][n][i][a]][b])
                throw validation_error(
                    "vertical degeneracy does not commute with horizontal "
                    "face");
        if (m + 1 <= mtrunc_ && n + 1 <= ntrunc_)
          for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= n; ++b)
              if (vdegens_[m + 1][n][hdegens_[m][n][i][a]][b] !=
                  hdegens_[m][n + 1][vdegens_[m][n][i][b]][a])
                throw validation_error(
                    "horizontal and vertical degeneracies do not commute");
        // face/degeneracy identities within each direction
        if (m + 1 <= mtrunc_)
          for (int j = 0; j <= m; ++j) {
            int sj = hdegens_[m][n][i][j];
            for (int k = 0; k <= m + 1; ++k) {
              int got = hfaces_[m + 1][n][sj][k];
              if (k == j || k == j + 1) {
                if (got != i)
                  throw validation_error(
                      "horizontal mixed identity fails (section)");
              }
            }
          }
        if (n + 1 <= ntrunc_)
          for (int j = 0; j <= n; ++j) {
            int sj = vdegens_[m][n][i][j];
            for (int k = 0; k <= n + 1; ++k) {
              int got = vfaces_[m][n + 1][sj][k];
              if (k == j || k == j + 1) {
                if (got != i)
                  throw validation_error(
                      "vertical mixed identity fails (section)");
              }
            }
          }
      }
}

BisimplicialSetBuilder::BisimplicialSetBuilder(int mtrunc, int ntrunc) {
  if (mtrunc < 0 || ntrunc < 0)
    throw validation_error("bisimplicial truncation must be nonnegative");
  s_.mtrunc_ = mtrunc;
  s_.ntrunc_ = ntrunc;
  auto dims = [&](auto& v) {
    v.resize(mtrunc + 1);
    for (auto& row : v) row.resize(ntrunc + 1);
  };
  dims(s_.labels_);
  dims(s_.index_);
  dims(s_.hfaces_);
  dims(s_.vfaces_);
  dims(s_.hdegens_);
  dims(s_.vdegens_);
}

int BisimplicialSetBuilder::add_simplex(int m, int n, std::string label) {
  if (m < 0 || m > s_.mtrunc_ || n < 0 || n > s_.ntrunc_)
    throw validation_error("bisimplex dimension out of range");
  int idx = static_cast<int>(s_.labels_[m][n].size());
  if (!s_.index_[m][n].emplace(label, idx).second)
    throw validation_error("duplicate bisimplex label " + label);
  s_.labels_[m][n].push_back(std::move(label));
  s_.hfaces_[m][n].emplace_back(m == 0 ? 0 : m + 1, -1);
  s_.vfaces_[m][n].emplace_back(n == 0 ? 0 : n + 1, -1);
  s_.hdegens_[m][n].emplace_back(m + 1 <= s_.mtrunc_ ? m + 1 : 0, -1);
  s_.vdegens_[m][n].emplace_back(n + 1 <= s_.ntrunc_ ? n + 1 : 0, -1);
  return idx;
}

void BisimplicialSetBuilder::set_hface(int m, int n, int i, int k,
                                       const std::string& target) {
  int t = s_.index_of(m - 1, n, target);
  if (t < 0) throw validation_error("horizontal face target not stored: " + target);
  s_.hfaces_[m][n][i][k] = t;
}

void BisimplicialSetBuilder::set_vface(int m, int n, int i, int k,
                                       const std::string& target) {
  int t = s_.index_of(m, n - 1, target);
  if (t < 0) throw validation_error("vertical face target not stored: " + target);
  s_.vfaces_[m][n][i][k] = t;
}

void BisimplicialSetBuilder::set_hdegeneracy(int m, int n, int i, int k,
                                             const std::string& target) {
  int t = s_.index_of(m + 1, n, target);
  if (t < 0)
    throw validation_error("horizontal degeneracy target not stored: " + target);
  s_.hdegens_[m][n][i][k] = t;
}

void BisimplicialSetBuilder::set_vdegeneracy(int m, int n, int i, int k,
                                             const std::string& target) {
  int t = s_.index_of(m, n + 1, target);
  if (t < 0)
    throw validation_error("vertical degeneracy target not stored: " + target);
  s_.vdegens_[m][n][i][k] = t;
}

BisimplicialSet BisimplicialSetBuilder::build(Validate check) && {
  for (int m = 0; m <= s_.mtrunc_; ++m)
    for (int n = 0; n <= s_.ntrunc_; ++n)
      for (std::size_t i = 0; i < s_.labels_[m][n].size(); ++i) {
        auto verify = [&](const std::vector<int>& v, const char* what) {
          for (int x : v)
            if (x < 0)
              throw validation_error(std::string("unset ") + what + " at " +
                                     s_.labels_[m][n][i]);
        };
        verify(s_.hfaces_[m][n][i], "horizontal face");
        verify(s_.vfaces_[m][n][i], "vertical face");
        verify(s_.hdegens_[m][n][i], "horizontal degeneracy");
        verify(s_.vdegens_[m][n][i], "vertical degeneracy");
      }
  if (check == Validate::yes) s_.validate();
  return std::move(s_);
}

void SimplicialMap::validate() const {
  int t = truncation();
  for (int n = 0; n <= t; ++n) {
    if (static_cast<int>(map[n].size()) != source.size(n))
      throw validation_error("simplicial map has wrong size in dimension " +
                             std::to_string(n));
    for (int i = 0; i < source.size(n); ++i) {
      int fi = map[n][i];
      if (fi < 0 || fi >= target.size(n))
        throw validation_error("simplicial map image out of range at " +
                               source.label(n, i));
      if (n >= 1)
        for (int k = 0; k <= n; ++k)
          if (map[n - 1][source.face(n, i, k)] != target.face(n, fi, k))
            throw validation_error("map does not commute with d_" +
                                   std::to_string(k) + " at " +
                                   source.label(n, i));
      if (n + 1 <= t && source.has_degeneracies(n) &&
          target.has_degeneracies(n))
        for (int k = 0; k <= n; ++k)
          if (map[n + 1][source.degeneracy(n, i, k)] !=
              target.degeneracy(n, fi, k))
            throw validation_error("map does not commute with s_" +
                                   std::to_string(k) + " at " +
                                   source.label(n, i));
    }
  }
}

SimplicialMap make_simplicial_map(
    SimplicialSet source, SimplicialSet target,
    const std::function<std::string(int, int)>& image_label, Validate check) {
  int t = std::min(source.truncation(), target.truncation());
  std::vector<std::vector<int>> map(t + 1);
  for (int n = 0; n <= t; ++n) {
    map[n].resize(source.size(n));
    for (int i = 0; i < source.size(n); ++i) {
      std::string l = image_label(n, i);
      int j = target.index_of(n, l);
      if (j < 0)
        throw validation_error("image simplex not found in target: " + l);
      map[n][i] = j;
    }
  }
  SimplicialMap f{std::move(source), std::move(target), std::move(map)};
  if (check == Validate::yes) f.validate();
  return f;
}

SimplicialMap identity_simplicial_map(const SimplicialSet& x) {
  std::vector<std::vector<int>> map(x.truncation() + 1);
  for (int n = 0; n <= x.truncation(); ++n) {
    map[n].resize(x.size(n));
    for (int i = 0; i < x.size(n); ++i) map[n][i] = i;
  }
  return SimplicialMap{x, x, std::move(map)};
}

SimplicialMap compose_simplicial_maps(const SimplicialMap& g,
                                      const SimplicialMap& f) {
  if (!(f.target == g.source))
    throw validation_error("simplicial map composition: middle mismatch");
  int t = std::min(f.truncation(), g.truncation());
  std::vector<std::vector<int>> map(t + 1);
  for (int n = 0; n <= t; ++n) {
    map[n].resize(f.map[n].size());
    for (std::size_t i = 0; i < f.map[n].size(); ++i)
      map[n][i] = g.map[n][f.map[n][i]];
  }
  return SimplicialMap{f.source, g.target, std::move(map)};
}

bool simplicial_maps_equal(const SimplicialMap& a, const SimplicialMap& b) {
  return a.source == b.source && a.target == b.target && a.map == b.map;
}

bool is_simplicial_iso(const SimplicialMap& f) {
  if (f.source.truncation() != f.target.truncation()) return false;
  for (int n = 0; n <= f.truncation(); ++n) {
    if (f.source.size(n) != f.target.size(n)) return false;
    std::vector<char> hit(f.target.size(n), 0);
    for (int i = 0; i < f.source.size(n); ++i) {
      if (hit[f.map[n][i]]) return false;
      hit[f.map[n][i]] = 1;
    }
  }
  return true;
}

SimplicialSet nerve(const CatPtr& c, int truncation) {
  SimplicialSetBuilder b(truncation);
  std::vector<std::vector<Chain>> chains(truncation + 1);
  for (int n = 0; n <= truncation; ++n) {
    chains[n] = enumerate_m_chains(*c, n);
    for (const Chain& ch : chains[n]) b.add_simplex(n, ch.label());
  }
  for (int n = 0; n <= truncation; ++n)
    for (std::size_t i = 0; i < chains[n].size(); ++i) {
      const Chain& ch = chains[n][i];
      for (int k = 0; n >= 1 && k <= n; ++k)
        b.set_face(n, static_cast<int>(i), k, chain_face(*c, ch, k).label());
      if (n + 1 <= truncation)
        for (int k = 0; k <= n; ++k)
          b.set_degeneracy(n, static_cast<int>(i), k,
                           chain_degeneracy(*c, ch, k).label());
    }
  return std::move(b).build();
}

SimplicialMap nerve_map(const Functor& f, int truncation) {
  SimplicialSet src = nerve(f.dom, truncation);
  SimplicialSet tgt = nerve(f.cod, truncation);
  const FinCategory& dom = *f.dom;
  // Chains enumerate in the same order as in nerve().
  std::vector<std::vector<Chain>> chains(truncation + 1);
  for (int n = 0; n <= truncation; ++n) chains[n] = enumerate_m_chains(dom, n);
  return make_simplicial_map(
      std::move(src), std::move(tgt),
      [&](int n, int i) {
        const Chain& ch = chains[n][i];
        Chain out;
        out.base = f.on_object(ch.base);
        for (mor_t a : ch.arrows) out.arrows.push_back(f.on_morphism(a));
        return out.label();
      });
}

SimplicialSet diagonal(const BisimplicialSet& x) {
  int t = std::min(x.htruncation(), x.vtruncation());
  SimplicialSetBuilder b(t);
  for (int n = 0; n <= t; ++n)
    for (int i = 0; i < x.size(n, n); ++i) b.add_simplex(n, x.label(n, n, i));
  for (int n = 0; n <= t; ++n)
    for (int i = 0; i < x.size(n, n); ++i) {
      for (int k = 0; n >= 1 && k <= n; ++k) {
        int h = x.hface(n, n, i, k);
        int d = x.vface(n - 1, n, h, k);
        b.set_face(n, i, k, x.label(n - 1, n - 1, d));
      }
      if (n + 1 <= t)
        for (int k = 0; k <= n; ++k) {
          int h = x.hdegeneracy(n, n, i, k);
          int d = x.vdegeneracy(n + 1, n, h, k);
          b.set_degeneracy(n, i, k, x.label(n + 1, n + 1, d));
        }
    }
  return std::move(b).build();
}

BisimplicialSet twist(const BisimplicialSet& x) {
  BisimplicialSetBuilder b(x.vtruncation(), x.htruncation());
  for (int m = 0; m <= x.vtruncation(); ++m)
    for (int n = 0; n <= x.htruncation(); ++n)
      for (int i = 0; i < x.size(n, m); ++i) b.add_simplex(m, n, x.label(n, m, i));
  for (int m = 0; m <= x.vtruncation(); ++m)
    for (int n = 0; n <= x.htruncation(); ++n)
      for (int i = 0; i < x.size(n, m); ++i) {
        for (int k = 0; m >= 1 && k <= m; ++k)
          b.set_hface(m, n, i, k, x.label(n, m - 1, x.vface(n, m, i, k)));
        for (int k = 0; n >= 1 && k <= n; ++k)
          b.set_vface(m, n, i, k, x.label(n - 1, m, x.hface(n, m, i, k)));
        if (m + 1 <= x.vtruncation())
          for (int k = 0; k <= m; ++k)
            b.set_hdegeneracy(m, n, i, k,
                              x.label(n, m + 1, x.vdegeneracy(n, m, i, k)));
        if (n + 1 <= x.htruncation())
          for (int k = 0; k <= n; ++k)
            b.set_vdegeneracy(m, n, i, k,
                              x.label(n + 1, m, x.hdegeneracy(n, m, i, k)));
      }
  return std::move(b).build();
}

BisimplicialSet constant_vertical(const SimplicialSet& y, int ntrunc) {
  BisimplicialSetBuilder b(y.truncation(), ntrunc);
  for (int m = 0; m <= y.truncation(); ++m)
    for (int n = 0; n <= ntrunc; ++n)
      for (int i = 0; i < y.size(m); ++i) b.add_simplex(m, n, y.label(m, i));
  for (int m = 0; m <= y.truncation(); ++m)
    for (int n = 0; n <= ntrunc; ++n)
      for (int i = 0; i < y.size(m); ++i) {
        const std::string& l = y.label(m, i);
        for (int k = 0; m >= 1 && k <= m; ++k)
          b.set_hface(m, n, i, k, y.label(m - 1, y.face(m, i, k)));
        for (int k = 0; n >= 1 && k <= n; ++k) b.set_vface(m, n, i, k, l);
        if (m + 1 <= y.truncation())
          for (int k = 0; k <= m; ++k)
            b.set_hdegeneracy(m, n, i, k, y.label(m + 1, y.degeneracy(m, i, k)));
        if (n + 1 <= ntrunc)
          for (int k = 0; k <= n; ++k) b.set_vdegeneracy(m, n, i, k, l);
      }
  return std::move(b).build();
}

std::string product_label(const std::string& a, const std::string& b) {
  return "P(" + a + "|" + b + ")";
}

SSetProduct sset_product(const SimplicialSet& x, const SimplicialSet& y) {
  int t = std::min(x.truncation(), y.truncation());
  SimplicialSetBuilder b(t);
  for (int n = 0; n <= t; ++n)
    for (int i = 0; i < x.size(n); ++i)
      for (int j = 0; j < y.size(n); ++j)
        b.add_simplex(n, product_label(x.label(n, i), y.label(n, j)));
  for (int n = 0; n <= t; ++n)
    for (int i = 0; i < x.size(n); ++i)
      for (int j = 0; j < y.size(n); ++j) {
        int idx = i * y.size(n) + j;
        for (int k = 0; n >= 1 && k <= n; ++k)
          b.set_face(n, idx, k,
                     product_label(x.label(n - 1, x.face(n, i, k)),
                                   y.label(n - 1, y.face(n, j, k))));
        if (n + 1 <= t)
          for (int k = 0; k <= n; ++k)
            b.set_degeneracy(n, idx, k,
                             product_label(x.label(n + 1, x.degeneracy(n, i, k)),
                                           y.label(n + 1, y.degeneracy(n, j, k))));
      }
  SSetProduct out;
  out.sset = std::move(b).build();
  std::vector<std::vector<int>> m1(t + 1), m2(t + 1);
  for (int n = 0; n <= t; ++n) {
    m1[n].resize(out.sset.size(n));
    m2[n].resize(out.sset.size(n));
    for (int i = 0; i < x.size(n); ++i)
      for (int j = 0; j < y.size(n); ++j) {
        m1[n][i * y.size(n) + j] = i;
        m2[n][i * y.size(n) + j] = j;
      }
  }
  // Truncate projection targets to the common truncation.
  auto truncate_to = [&](const SimplicialSet& s) {
    SimplicialSetBuilder tb(t);
    for (int n = 0; n <= t; ++n)
      for (int i = 0; i < s.size(n); ++i) tb.add_simplex(n, s.label(n, i));
    for (int n = 0; n <= t; ++n)
      for (int i = 0; i < s.size(n); ++i) {
        for (int k = 0; n >= 1 && k <= n; ++k)
          tb.set_face(n, i, k, s.label(n - 1, s.face(n, i, k)));
        if (n + 1 <= t)
          for (int k = 0; k <= n; ++k)
            tb.set_degeneracy(n, i, k, s.label(n + 1, s.degeneracy(n, i, k)));
      }
    return std::move(tb).build();
  };
  out.proj1 = SimplicialMap{out.sset, truncate_to(x), std::move(m1)};
  out.proj2 = SimplicialMap{out.sset, truncate_to(y), std::move(m2)};
  out.proj1.validate();
  out.proj2.validate();
  return out;
}

}  // namespace dowker
