#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "dowker/complexes.hpp"

namespace dowker {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-oriented category files:
//   object <name>
//   identity <mor-name> <object>
//   morphism <mor-name> <src> <tgt>
//   compose <g> <f> <g.f>
// Identity composites are filled in automatically; every other composable
// pair needs an explicit entry.  '#' starts a comment.
CatPtr parse_category(std::istream& in, const std::string& source_name);
std::string dump_category(const FinCategory& c);

// Relation files bundle three category sections and two functor tables:
//   [category total] ... [category left] ... [category right]
//   [functor left]  object <total-obj> <image> / morphism <total-mor> <image>
//   [functor right] ...
CatRelation parse_relation(std::istream& in, const std::string& source_name);
std::string dump_relation(const CatRelation& r);

// Complex files: vertex lines, optional total order, facet lines.
//   vertex <name>
//   order <name> <name> ...
//   facet <name> <name> ...
struct ComplexFile {
  SimplicialComplex complex;
  std::optional<std::vector<int>> order;
};
ComplexFile parse_complex(std::istream& in, const std::string& source_name);
std::string dump_complex(const SimplicialComplex& k,
                         const std::optional<std::vector<int>>& order);

// Pair-relation files:
//   xset <name> ...
//   yset <name> ...
//   pair <x> <y>
SetRelation parse_pairs(std::istream& in, const std::string& source_name);
std::string dump_pairs(const SetRelation& r);

nlohmann::ordered_json sset_to_json(const SimplicialSet& s);
SimplicialSet sset_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json homology_to_json(const std::vector<HomologyGroup>& h,
                                        int certified_maxdeg, bool reduced);

// Sparse triplet text block: one "row col value" line per nonzero entry.
std::string matrix_to_triplets(const IntMatrix& m);

}  // namespace dowker
