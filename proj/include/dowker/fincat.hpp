#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using obj_t = int;
using mor_t = int;

enum class Validate { yes, no };

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// Composition tables are stored as dense |mor|^2 arrays, so constructions
// refuse to build categories with more morphisms than this limit.  The
// default of 4096 caps a table at 64 MiB; adjust for larger experiments.
std::size_t& morphism_limit();

/// A finite category: objects, morphisms with source/target, identities and
/// an explicit composition table.  Values are immutable after construction.
class FinCategory {
 public:
  struct Mor {
    std::string name;
    obj_t src = -1;
    obj_t tgt = -1;
  };

  FinCategory(std::vector<std::string> objects, std::vector<Mor> morphisms,
              std::vector<mor_t> identities, std::vector<int32_t> compose_table,
              Validate check = Validate::yes);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(mors_.size()); }

  const std::string& object_name(obj_t o) const { return objects_[o]; }
  const Mor& morphism(mor_t m) const { return mors_[m]; }
  obj_t source(mor_t m) const { return mors_[m].src; }
  obj_t target(mor_t m) const { return mors_[m].tgt; }
  mor_t identity(obj_t o) const { return identity_[o]; }
  bool is_identity(mor_t m) const { return identity_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }

  bool composable(mor_t g, mor_t f) const { return mors_[f].tgt == mors_[g].src; }
  // g after f; throws if the pair is not composable.
  mor_t compose(mor_t g, mor_t f) const;

  const std::vector<mor_t>& morphisms_from(obj_t o) const { return from_[o]; }
  std::vector<mor_t> hom(obj_t x, obj_t y) const;

  obj_t object_index(const std::string& name) const;   // -1 if absent
  mor_t morphism_index(const std::string& name) const;

  // Exhaustive identity/unit/associativity checks over the whole table.
  void validate() const;

  bool operator==(const FinCategory& other) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<mor_t> identity_;
  std::vector<int32_t> comp_;  // comp_[g * |mor| + f], -1 where undefined
  std::vector<std::vector<mor_t>> from_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

std::optional<obj_t> find_initial_object(const FinCategory& c);
std::optional<obj_t> find_terminal_object(const FinCategory& c);

struct Functor {
  CatPtr dom, cod;
  std::vector<obj_t> object_map;
  std::vector<mor_t> morphism_map;

  obj_t on_object(obj_t o) const { return object_map[o]; }
  mor_t on_morphism(mor_t m) const { return morphism_map[m]; }
};

Functor make_functor(CatPtr dom, CatPtr cod, std::vector<obj_t> object_map,
                     std::vector<mor_t> morphism_map,
                     Validate check = Validate::yes);
Functor identity_functor(CatPtr c);
Functor compose_functors(const Functor& g, const Functor& f);
bool functor_equal(const Functor& a, const Functor& b);
bool is_isomorphism(const Functor& f);

/// A length-m chain of composable arrows, the working encoding of a functor
/// [m] -> C.  For m = 0 only the base object is set.
struct Chain {
  obj_t base = -1;
  std::vector<mor_t> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Chain&) const = default;
  std::string label() const;
};

obj_t chain_object(const FinCategory& c, const Chain& ch, int i);
Chain chain_face(const FinCategory& c, const Chain& ch, int i);
Chain chain_degeneracy(const FinCategory& c, const Chain& ch, int i);
bool chain_has_identity_arrow(const FinCategory& c, const Chain& ch);
std::vector<Chain> enumerate_m_chains(const FinCategory& c, int m);

// The unique morphism x -> y; throws unless |hom(x,y)| = 1.
mor_t hom_unique(const FinCategory& c, obj_t x, obj_t y);

// ---- standard constructions ----

CatPtr ordinal(int n);
CatPtr poset_category(std::vector<std::string> elements,
                      const std::function<bool(int, int)>& leq);
CatPtr translation_category(std::vector<std::string> elements);

struct ProductCategory {
  CatPtr cat;
  CatPtr factor1, factor2;
  Functor proj1, proj2;

  obj_t object_of(obj_t c, obj_t d) const;
  mor_t morphism_of(mor_t f, mor_t g) const;
  std::pair<obj_t, obj_t> object_parts(obj_t o) const;
  std::pair<mor_t, mor_t> morphism_parts(mor_t m) const;
};
ProductCategory product_category(CatPtr c, CatPtr d);

struct CommaCategory {
  struct Obj {
    obj_t c = -1, d = -1;
    mor_t f = -1;  // F(c) -> G(d) in the common codomain
  };
  CatPtr cat;
  std::vector<Obj> triples;
  Functor proj_left, proj_right;
};
CommaCategory comma_category(const Functor& f, const Functor& g);

struct Subcategory {
  CatPtr cat;
  Functor inclusion;
  std::vector<obj_t> objects;    // ambient object indices
  std::vector<mor_t> morphisms;  // ambient morphism indices
};
Subcategory full_subcategory(CatPtr c, std::vector<obj_t> objects);

Functor functor_product(const Functor& f, const Functor& g,
                        const ProductCategory& dom, const ProductCategory& cod);

std::vector<Functor> enumerate_chains(CatPtr c, int m);
Functor chain_to_functor(CatPtr c, const Chain& ch);
Chain functor_chain(const Functor& f);

}  // namespace dowker
