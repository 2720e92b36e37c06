#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dowker/fincat.hpp"

namespace dowker {

/// A truncated simplicial set with explicitly stored simplices.  Simplices
/// are identified by canonical labels; faces and degeneracies are index
/// tables.  Degeneracy tables exist for dimensions n with n+1 <= truncation.
class SimplicialSet {
 public:
  SimplicialSet() = default;

  int truncation() const { return trunc_; }
  int size(int n) const;
  const std::string& label(int n, int i) const { return labels_[n][i]; }
  int index_of(int n, const std::string& l) const;
  int face(int n, int i, int k) const { return faces_[n][i][k]; }
  int degeneracy(int n, int i, int k) const { return degens_[n][i][k]; }
  bool has_degeneracies(int n) const { return n + 1 <= trunc_; }

  // Scan for (k, y) with s_k(y) = simplex i of dimension n.
  std::optional<std::pair<int, int>> degeneracy_witness(int n, int i) const;
  bool is_degenerate(int n, int i) const {
    return degeneracy_witness(n, i).has_value();
  }
  std::vector<int> nondegenerate(int n) const;

  // Exhaustive simplicial identities on all stored data.
  void validate() const;

  bool operator==(const SimplicialSet& o) const {
    return trunc_ == o.trunc_ && labels_ == o.labels_ && faces_ == o.faces_ &&
           degens_ == o.degens_;
  }

 private:
  int trunc_ = -1;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::unordered_map<std::string, int>> index_;
  // faces_[n][i] has n+1 entries (empty for n = 0); degens_[n][i] has n+1
  // entries when stored.
  std::vector<std::vector<std::vector<int>>> faces_;
  std::vector<std::vector<std::vector<int>>> degens_;

  friend class SimplicialSetBuilder;
};

/// Two-phase construction: add every simplex first, then set the tables.
class SimplicialSetBuilder {
 public:
  explicit SimplicialSetBuilder(int truncation);
  int add_simplex(int n, std::string label);
  void set_face(int n, int i, int k, const std::string& target);
  void set_degeneracy(int n, int i, int k, const std::string& target);
  SimplicialSet build(Validate check = Validate::yes) &&;

 private:
  SimplicialSet s_;
};

/// A bisimplicial set truncated at (M, N); horizontal operators act on the
/// first index, vertical on the second.
class BisimplicialSet {
 public:
  BisimplicialSet() = default;

  int htruncation() const { return mtrunc_; }
  int vtruncation() const { return ntrunc_; }
  int size(int m, int n) const;
  const std::string& label(int m, int n, int i) const {
    return labels_[m][n][i];
  }
  int index_of(int m, int n, const std::string& l) const;
  int hface(int m, int n, int i, int k) const { return hfaces_[m][n][i][k]; }
  int vface(int m, int n, int i, int k) const { return vfaces_[m][n][i][k]; }
  int hdegeneracy(int m, int n, int i, int k) const {
    return hdegens_[m][n][i][k];
  }
  int vdegeneracy(int m, int n, int i, int k) const {
    return vdegens_[m][n][i][k];
  }

  // Simplicial identities in each direction plus commutation across them.
  void validate() const;

  bool operator==(const BisimplicialSet& o) const {
    return mtrunc_ == o.mtrunc_ && ntrunc_ == o.ntrunc_ &&
           labels_ == o.labels_ && hfaces_ == o.hfaces_ &&
           vfaces_ == o.vfaces_ && hdegens_ == o.hdegens_ &&
           vdegens_ == o.vdegens_;
  }

 private:
  int mtrunc_ = -1, ntrunc_ = -1;
  std::vector<std::vector<std::vector<std::string>>> labels_;
  std::vector<std::vector<std::unordered_map<std::string, int>>> index_;
  std::vector<std::vector<std::vector<std::vector<int>>>> hfaces_, vfaces_,
      hdegens_, vdegens_;

  friend class BisimplicialSetBuilder;
};

class BisimplicialSetBuilder {
 public:
  BisimplicialSetBuilder(int mtrunc, int ntrunc);
  int add_simplex(int m, int n, std::string label);
  void set_hface(int m, int n, int i, int k, const std::string& target);
  void set_vface(int m, int n, int i, int k, const std::string& target);
  void set_hdegeneracy(int m, int n, int i, int k, const std::string& target);
  void set_vdegeneracy(int m, int n, int i, int k, const std::string& target);
  BisimplicialSet build(Validate check = Validate::yes) &&;

 private:
  BisimplicialSet s_;
};

struct SimplicialMap {
  SimplicialSet source, target;
  std::vector<std::vector<int>> map;  // per dimension, up to common truncation

  int truncation() const { return static_cast<int>(map.size()) - 1; }
  int apply(int n, int i) const { return map[n][i]; }

  // Naturality against every face and degeneracy operator in range; throws
  // with the witness simplex and operator.
  void validate() const;
};

SimplicialMap make_simplicial_map(
    SimplicialSet source, SimplicialSet target,
    const std::function<std::string(int, int)>& image_label,
    Validate check = Validate::yes);
SimplicialMap identity_simplicial_map(const SimplicialSet& x);
SimplicialMap compose_simplicial_maps(const SimplicialMap& g,
                                      const SimplicialMap& f);
bool simplicial_maps_equal(const SimplicialMap& a, const SimplicialMap& b);
bool is_simplicial_iso(const SimplicialMap& f);

// ---- constructions ----

// Nerve of a category, truncated; simplices are composable chains.
SimplicialSet nerve(const CatPtr& c, int truncation);

// Nerve functoriality: the map N(f) on truncated nerves.
SimplicialMap nerve_map(const Functor& f, int truncation);

SimplicialSet diagonal(const BisimplicialSet& x);
BisimplicialSet twist(const BisimplicialSet& x);

// Bisimplicial set constant in the vertical direction.
BisimplicialSet constant_vertical(const SimplicialSet& y, int ntrunc);

struct SSetProduct {
  SimplicialSet sset;
  SimplicialMap proj1, proj2;
};
SSetProduct sset_product(const SimplicialSet& x, const SimplicialSet& y);

std::string product_label(const std::string& a, const std::string& b);

}  // namespace dowker
