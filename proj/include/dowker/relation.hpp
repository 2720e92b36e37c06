#pragma once

#include <functional>
#include <string>

#include "dowker/fincat.hpp"

namespace dowker {

/// A relation of categories, stored as the pair of components of a functor
/// into a product: left and right share the same domain.
struct CatRelation {
  CatPtr total;   // shared domain
  Functor left;   // total -> C
  Functor right;  // total -> D
};

CatRelation make_relation(CatPtr total, Functor left, Functor right);
bool relation_equal(const CatRelation& a, const CatRelation& b);

// Swaps the two components; an exact involution.
CatRelation transpose(const CatRelation& r);

// The relation whose total is C x D with the projections as components.
struct IdentityRelation {
  CatRelation rel;
  ProductCategory prod;
};
IdentityRelation identity_relation(CatPtr c, CatPtr d);

/// The full subcategory of C x D spanned by the object pairs accepted by
/// `keep`, with the restricted projections.  The ambient product is never
/// materialized.
CatRelation full_subproduct_relation(CatPtr c, CatPtr d,
                                     const std::function<bool(obj_t, obj_t)>& keep);

// True when (left, right) exhibits the total as a full subcategory of the
// product of the codomains: jointly injective on objects, bijective on homs.
bool is_full_subcategory_relation(const CatRelation& r);

struct RelMorphism {
  CatRelation source, target;
  Functor f0;  // between totals
  Functor f1;  // between left codomains
  Functor f2;  // between right codomains
};

// Validates the commutation (f1 x f2) . R = R' . f0; reports a witness
// morphism of the source total on failure.
RelMorphism make_rel_morphism(Functor f0, Functor f1, Functor f2,
                              const CatRelation& source,
                              const CatRelation& target);
RelMorphism identity_rel_morphism(const CatRelation& r);
RelMorphism compose_rel_morphisms(const RelMorphism& g, const RelMorphism& f);
RelMorphism transpose(const RelMorphism& f);
bool rel_morphism_equal(const RelMorphism& a, const RelMorphism& b);

struct ProductRelation {
  CatRelation rel;
  RelMorphism proj1, proj2;
  ProductCategory total_prod, left_prod, right_prod;
};
ProductRelation product_relation(const CatRelation& r, const CatRelation& s);

// Pairing map into a product relation from a common source.
RelMorphism pair_rel_morphisms(const RelMorphism& to_first,
                               const RelMorphism& to_second,
                               const ProductRelation& prod);

RelMorphism product_rel_morphism(const RelMorphism& f, const RelMorphism& g,
                                 const ProductRelation& dom,
                                 const ProductRelation& cod);

}  // namespace dowker
