#pragma once

#include <cstddef>
#include <optional>

#include "dowker/homology.hpp"
#include "dowker/relation.hpp"
#include "dowker/sset.hpp"

namespace dowker {

/// A grid functor [m] x [n] -> total, stored by its objects and generating
/// steps.  Commuting squares plus the factorization constraints (vertical
/// steps map to identities on the left, horizontal steps to identities on
/// the right, and the outer components are constant across rows/columns)
/// characterize membership in the rectangle nerve.
struct RectangleSimplex {
  int m = 0, n = 0;
  std::vector<obj_t> obj;   // (m+1) x (n+1), obj[i*(n+1)+j]
  std::vector<mor_t> hmor;  // m x (n+1):  (i,j) -> (i+1,j)
  std::vector<mor_t> vmor;  // (m+1) x n:  (i,j) -> (i,j+1)

  obj_t at(int i, int j) const { return obj[i * (n + 1) + j]; }
  mor_t h(int i, int j) const { return hmor[i * (n + 1) + j]; }
  mor_t v(int i, int j) const { return vmor[i * n + j]; }

  std::string label() const;
  bool operator==(const RectangleSimplex&) const = default;
};

// Precomposition with a pair of monotone maps, given by their value lists.
RectangleSimplex apply_grid(const FinCategory& total, const RectangleSimplex& r,
                            const std::vector<int>& alpha,
                            const std::vector<int>& beta);

RectangleSimplex transpose_grid(const RectangleSimplex& r);

// Grid membership oracle: endpoints, commuting squares, factorization.
bool is_valid_rectangle(const CatRelation& rel, const RectangleSimplex& r);

// A diagonal simplex is degenerate at i exactly when the whole column step
// i -> i+1 and the whole row step i -> i+1 consist of identities.  Fast
// test for square grids, cross-validated against the generic witness scan.
bool diagonal_degenerate_at(const FinCategory& total,
                            const RectangleSimplex& r, int i);

Chain grid_left_chain(const CatRelation& rel, const RectangleSimplex& r);
Chain grid_right_chain(const CatRelation& rel, const RectangleSimplex& r);

RectangleSimplex map_grid(const RelMorphism& f, const RectangleSimplex& r);
Chain map_chain(const Functor& f, const Chain& c);

/// The rectangle nerve of a relation, truncated at (M, N), with the grid
/// data of every simplex retained.
class RectangleNerve {
 public:
  static RectangleNerve build(const CatRelation& rel, int mtrunc, int ntrunc);

  const CatRelation& relation() const { return rel_; }
  const BisimplicialSet& bis() const { return bis_; }
  int count(int m, int n) const;
  const RectangleSimplex& grid(int m, int n, int i) const {
    return grids_[m][n][i];
  }
  Chain left_chain(int m, int n, int i) const {
    return grid_left_chain(rel_, grids_[m][n][i]);
  }
  Chain right_chain(int m, int n, int i) const {
    return grid_right_chain(rel_, grids_[m][n][i]);
  }

 private:
  CatRelation rel_;
  BisimplicialSet bis_;
  std::vector<std::vector<std::vector<RectangleSimplex>>> grids_;
};

struct DowkerNerveData {
  SimplicialSet sset;
  std::vector<std::vector<Chain>> chains;  // aligned with sset storage
};

DowkerNerveData build_dowker_nerve(const CatRelation& rel, int truncation);
SimplicialSet dowker_nerve(const CatRelation& rel, int truncation);

// d(pi): the projection of the diagonal of the rectangle nerve onto the
// Dowker nerve, validated as a simplicial map.
SimplicialMap diagonal_projection(const RectangleNerve& er,
                                  const SimplicialSet& dr);

// The map of Dowker nerves induced by a morphism of relations.
SimplicialMap dowker_nerve_map(const RelMorphism& f, const SimplicialSet& src,
                               const SimplicialSet& tgt);

// The diagonal of the rectangle-nerve map induced by a morphism of relations.
SimplicialMap diagonal_rectangle_map(const RelMorphism& f,
                                     const RectangleNerve& src,
                                     const RectangleNerve& tgt);

// Checks the square: projecting after mapping equals mapping the projection,
// on every stored bidegree of the source rectangle nerve.
bool projection_naturality_holds(const RelMorphism& f,
                                 const RectangleNerve& src,
                                 const RectangleNerve& tgt);

/// Grid transposition from the twisted rectangle nerve of R onto the
/// rectangle nerve of the transpose; verified bijective in every stored
/// bidegree and compatible with all four operator families.
struct RectangleTranspose {
  std::vector<std::vector<std::vector<int>>> map;  // (m,n) -> index in (n,m)
  bool bijective = false;
};
RectangleTranspose rectangle_transpose_iso(const RectangleNerve& er,
                                           const RectangleNerve& ert);
SimplicialMap diagonal_transpose_iso(const RectangleNerve& er,
                                     const RectangleNerve& ert);

// The fiber of a chain under the projection, truncated at `truncation` in
// the fiber direction.
SimplicialSet fiber(const CatRelation& rel, const Chain& a, int truncation);
SimplicialSet fiber(const CatRelation& rel, const Functor& a, int truncation);

enum class DowkerStrategy { initial_terminal, acyclic, both };
enum class DowkerStatus { certified_dowker, acyclic_evidence, not_dowker,
                          inconclusive };

struct DowkerBounds {
  int max_chain_length = 2;   // chains checked up to this length
  int fiber_truncation = 2;   // fibers stored up to this dimension
  std::size_t state_cap = std::size_t{1} << 20;  // image-set search states
};

struct FiberReport {
  std::string chain_label;  // chain, or object-set for certificates
  int chain_length = -1;
  bool empty = false;
  bool ok = true;
  std::vector<long long> reduced_betti;  // degrees 0..fiber_truncation-1
  std::string note;
};

struct DowkerVerdict {
  DowkerStatus status = DowkerStatus::inconclusive;
  DowkerStrategy strategy = DowkerStrategy::both;
  DowkerBounds bounds;
  std::vector<FiberReport> reports;
  std::optional<std::size_t> witness;  // index of the failing report
  std::string detail;
};

const char* to_string(DowkerStatus s);

DowkerVerdict check_dowker(const CatRelation& rel, DowkerStrategy strategy,
                           DowkerBounds bounds);

}  // namespace dowker
