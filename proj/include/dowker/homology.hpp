#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "dowker/sset.hpp"

namespace dowker {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
};

/// u * A * v = d with u, v unimodular; equivalently A = uinv * d * vinv.
/// The nonzero diagonal entries of d are positive and divide successively.
struct SmithForm {
  IntMatrix d;
  IntMatrix u, uinv, v, vinv;
  int rank = 0;
  std::vector<Int> invariant_factors;
};

SmithForm smith_normal_form(IntMatrix m);

struct HomologyGroup {
  int degree = 0;
  long long betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
};

std::string to_string(const HomologyGroup& g);

/// Free integer chain complex with bases in degrees 0..maxdeg+1 and
/// boundaries in degrees 1..maxdeg+1; homology is certified in 0..maxdeg.
struct ChainComplex {
  int maxdeg = -1;
  std::vector<std::vector<std::string>> basis;  // 0..maxdeg+1
  std::vector<IntMatrix> boundary;              // boundary[n]: C_n -> C_{n-1}

  int dim(int n) const {
    return n >= 0 && n < static_cast<int>(basis.size())
               ? static_cast<int>(basis[n].size())
               : 0;
  }
  void verify_dd_zero() const;
  bool operator==(const ChainComplex&) const = default;
};

ChainComplex normalized_chain_complex(const SimplicialSet& x, int maxdeg);

std::vector<HomologyGroup> homology(const ChainComplex& c,
                                    const std::vector<int>& degrees,
                                    bool reduced = false);
std::vector<HomologyGroup> homology(const SimplicialSet& x,
                                    const std::vector<int>& degrees,
                                    bool reduced = false);

struct ChainMap {
  ChainComplex source, target;
  std::vector<IntMatrix> mat;  // degrees 0..maxdeg+1

  void validate() const;  // commutes with boundaries in range
};

ChainMap induced_chain_map(const SimplicialMap& f, int maxdeg);
ChainMap identity_chain_map(const ChainComplex& c);

/// Quasi-isomorphism certificate through degree max_degree: the mapping cone
/// has vanishing homology in degrees 0..max_degree, and source and target
/// have equal homology in degree max_degree (a surjection between isomorphic
/// finitely generated abelian groups is an isomorphism, which closes the top
/// degree).
struct QuasiIsoVerdict {
  bool certified = false;
  int max_degree = -1;
  std::vector<HomologyGroup> cone_homology;
  std::vector<HomologyGroup> source_homology, target_homology;
  std::string detail;
};

QuasiIsoVerdict is_quasi_iso(const ChainMap& f, int max_degree);

// Equality of the induced maps on homology in degrees 0..max_degree.
bool homology_maps_equal(const ChainMap& f, const ChainMap& g, int max_degree);

// Rank of the free part and torsion of H_k for each requested degree; the
// canonical coordinates of a homology class are exposed for map comparison.
class HomologyCoordinates {
 public:
  HomologyCoordinates(const ChainComplex& c, int degree, bool reduced = false);

  HomologyGroup group() const;
  int cycle_space_rank() const { return kappa_; }
  // Canonical coordinates of the class of a cycle: torsion coordinates are
  // reduced modulo their invariant factor, free coordinates are exact.
  std::vector<Int> class_of(const std::vector<Int>& cycle) const;
  // Generators of the cycle group, as chains.
  std::vector<std::vector<Int>> cycle_generators() const;

 private:
  int degree_;
  int dim_;
  int kappa_ = 0;
  IntMatrix q_;        // kernel coordinates: kappa x dim
  IntMatrix gens_;     // dim x kappa, columns generate the cycles
  SmithForm msnf_;     // of q * boundary_{k+1}
};

}  // namespace dowker
