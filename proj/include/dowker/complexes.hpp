#pragma once

#include "dowker/dowker.hpp"

namespace dowker {

/// A finite simplicial complex: named vertices and a downward-closed family
/// of nonempty simplices, stored as sorted vertex index lists.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> simplices;  // sorted lists, ordered by (size, lex)

  bool contains(const std::vector<int>& sorted_simplex) const;
  int dimension() const;
  std::string simplex_name(const std::vector<int>& s) const;
};

SimplicialComplex make_complex(std::vector<std::string> vertices,
                               const std::vector<std::vector<int>>& facets);

struct SetRelation {
  std::vector<std::string> xs, ys;
  std::vector<std::pair<int, int>> pairs;  // sorted, unique
};

SetRelation make_set_relation(std::vector<std::string> xs,
                              std::vector<std::string> ys,
                              std::vector<std::pair<int, int>> pairs);
SetRelation transpose(const SetRelation& r);

// Classical construction: x-subsets sharing a common witness y.
SimplicialComplex dowker_complex(const SetRelation& r);

// Simplicial homology via ordered-simplex chains; the internal vertex order
// only fixes orientations.
ChainComplex ordered_simplex_chain_complex(const SimplicialComplex& k,
                                           int maxdeg);
std::vector<HomologyGroup> complex_homology(const SimplicialComplex& k,
                                            const std::vector<int>& degrees,
                                            bool reduced = false);

// Vertex tuples spanning simplices: arbitrary tuples (chains of the
// translation category) and order-preserving tuples (chains of the ordered
// vertex poset).  `order` lists all vertex indices from smallest to largest.
SimplicialSet sing(const SimplicialComplex& k, int truncation);
SimplicialSet sing_ordered(const SimplicialComplex& k,
                           const std::vector<int>& order, int truncation);

/// The membership relations of a complex and the comparison morphisms
/// between them.
struct ComplexRelations {
  SimplicialComplex complex;
  CatPtr vposet;          // ordered vertices
  CatPtr vtrans;          // translation category on the vertices
  CatPtr kposet;          // simplices under inclusion
  ProductCategory vprod;  // vtrans x vposet
  CatRelation r0, r1, r2;
  RelMorphism r0_to_r1, r0_to_r2, r1_into_r2;
};
ComplexRelations complex_relations(const SimplicialComplex& k,
                                   const std::vector<int>& order);
CatRelation relation_r1(const SimplicialComplex& k,
                        const std::vector<int>& order);
CatRelation relation_r2(const SimplicialComplex& k);
CatRelation relation_r0(const SimplicialComplex& k,
                        const std::vector<int>& order);

CatRelation comma_relation(const Functor& f, const Functor& g);

// The object of a subproduct-style relation with the given components, and
// the morphism with the given endpoints and components.
obj_t find_total_object(const CatRelation& rel, obj_t left_o, obj_t right_o);
mor_t find_total_morphism(const CatRelation& rel, obj_t src, obj_t tgt,
                          mor_t left_m, mor_t right_m);

/// Verifies that h restricts along the two end inclusions of the interval
/// to f0 (at the end missed by the 0th coface) and f1 (at the other end).
/// Type mismatches throw; a failed restriction returns false.
bool check_transformation(const RelMorphism& h, const RelMorphism& f0,
                          const RelMorphism& f1);

struct TransformationData {
  ProductRelation cylinder;  // interval identity relation times r0
  RelMorphism h;             // cylinder -> r2
  RelMorphism top;           // r0 -> r2, first projection of the vertex pair
  RelMorphism bottom;        // r0 -> r1 -> r2, second projection
};
TransformationData r0_homotopy(const ComplexRelations& rels);

/// The homotopy of Dowker nerves induced by a transformation: the cylinder
/// over the Dowker nerve of r mapping to the Dowker nerve of the target.
struct NerveHomotopy {
  SSetProduct cylinder;  // interval nerve x Dowker nerve of r
  SimplicialMap map;
};
NerveHomotopy dowker_homotopy(const RelMorphism& h, const ProductRelation& cyl,
                              const CatRelation& r, int truncation);

// Comparison map witnessing that the Dowker nerve takes products to
// products: from the nerve of the product relation to the product of the
// nerves.
SimplicialMap dowker_product_comparison(const ProductRelation& prod,
                                        int truncation);

CatRelation set_relation_discrete(const SetRelation& r);
CatRelation set_relation_translation(const SetRelation& r);

}  // namespace dowker
