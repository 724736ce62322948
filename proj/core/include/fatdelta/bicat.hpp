#pragma once

// Bicategories whose composition is strictly associative, with weak units
// given as identity triples (I, lambda, rho). Also the two passages to and
// from fair 2-categories.

#include <cstddef>
#include <string>
#include <vector>

#include "fatdelta/fair_two.hpp"
#include "fatdelta/fincat.hpp"
#include "fatdelta/semi_two.hpp"

namespace fatdelta {

/// A weak identity arrow at `object`. left[z][Y] is the 2-cell I (x) Y -> Y
/// for Y in Hom(object, z); right[w][X] is X (x) I -> X for X in Hom(w, object).
struct IdentityTriple {
  std::size_t object = 0;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> left;
  std::vector<std::vector<std::size_t>> right;

  bool operator==(const IdentityTriple&) const = default;
};

struct StrictCompBicategory {
  SemiTwoCategory cells;
  std::vector<IdentityTriple> units;  // one chosen triple per object

  bool operator==(const StrictCompBicategory&) const = default;
};

/// Shape, invertibility, naturality of lambda and rho, and the Kelly
/// condition rho_X (x) Y = X (x) lambda_Y.
Verdict validate_identity_triple(const SemiTwoCategory& s, const IdentityTriple& t);

Verdict validate_bicategory(const StrictCompBicategory& c);

/// The strict identity triple at `object` whose unit is a strict identity
/// 1-cell: every constraint is an identity 2-cell.
IdentityTriple strict_triple(const SemiTwoCategory& s, std::size_t object, std::size_t unit);

/// Whether theta : I -> J in Hom(o,o) is a morphism of identity triples.
bool is_triple_morphism(const SemiTwoCategory& s, std::size_t theta, const IdentityTriple& from,
                        const IdentityTriple& to);

struct IdentityCategory {
  FinCategory category;                 // objects are triples, arrows compatible 2-cells
  std::vector<IdentityTriple> triples;  // per object of `category`
  std::vector<std::size_t> arrow_cells; // underlying 2-cell in Hom(o,o) per arrow
  bool contractible = false;
};

/// All identity triples at `object` with invertible constraints, found by
/// exhaustive search. Throws std::invalid_argument if c is not valid.
IdentityCategory identity_category(const StrictCompBicategory& c, std::size_t object);

/// rho1 at I2, inverted, then lambda2 at I1: a 2-cell I2 -> I1 which is a
/// morphism t2 -> t1. Throws std::invalid_argument for triples at different
/// objects and std::logic_error if the composite is not a morphism.
std::size_t canonical_unit_iso(const SemiTwoCategory& s, const IdentityTriple& t1, const IdentityTriple& t2);

/// Unit I (x) I' with lambda = (I (x) lambda') ; lambda and rho = (rho (x) I') ; rho'.
IdentityTriple tensor_identity_triples(const SemiTwoCategory& s, const IdentityTriple& t1, const IdentityTriple& t2);

/// U(x) is the identity category at x, embedded by forgetting to the unit
/// 1-cell. Throws std::invalid_argument if c is not valid.
FairTwoCategory bicat_to_fair2(const StrictCompBicategory& c);

enum class UnitChoice { first, last };

/// Picks I_x as the first (or last) object of U(x), takes alpha from the
/// unique arrow I (x) I -> I and solves for lambda and rho. Throws
/// std::invalid_argument if x is not valid.
StrictCompBicategory fair2_to_bicat(const FairTwoCategory& x, UnitChoice choice = UnitChoice::first);

/// Object map, hom maps and unit comparisons phi_o : I_{F o} -> F(I_o).
struct BifunctorStrict {
  struct HomMap {
    std::vector<std::size_t> objects;
    std::vector<std::size_t> arrows;
  };
  std::vector<std::size_t> objects;
  std::vector<HomMap> homs;  // indexed x * |objects| + y
  std::vector<std::size_t> unit_comparisons;
};

/// Hom maps are functors, composition is preserved strictly, each phi is
/// invertible and compatible with both constraints.
Verdict validate_bifunctor(const StrictCompBicategory& from, const StrictCompBicategory& to,
                           const BifunctorStrict& f);

}  // namespace fatdelta
