#pragma once

// Fair categories in Set: a triple (O, A, U) of objects, arrows and weak
// identity arrows. The presheaf on the fat delta is never materialized;
// its value at any coloured ordinal is generated from the triple.

#include <cstddef>
#include <string>
#include <vector>

#include "fatdelta/fat_delta.hpp"
#include "fatdelta/fincat.hpp"

namespace fatdelta {

struct FairUnit {
  std::string id;
  std::size_t object;  // base point in O
  std::size_t arrow;   // carrier u(w) in A

  bool operator==(const FairUnit&) const = default;
};

/// `arrows` holds O, A, s, t and the partial composition; its identity
/// slots are not used. U is a separate set with an injection into A.
struct FairSetCategory {
  FinCategory arrows;
  std::vector<FairUnit> units;

  std::size_t object_count() const { return arrows.object_count(); }
  /// The unit whose base is x, or npos.
  std::size_t unit_at(std::size_t x) const;

  bool operator==(const FairSetCategory&) const = default;
};

struct FairSetVerdict {
  Verdict verdict;
  bool is_fair_monoid = false;
  /// Weak identity arrows are endomorphisms.
  bool units_are_endo = false;
  /// Every u(w) acts as a strict identity on its hom fibres.
  bool units_strict = false;

  bool ok() const { return verdict.ok(); }
};

FairSetVerdict validate_fair_set(const FairSetCategory& x);

/// The underlying category; identity of x is u(base^-1(x)). Throws
/// std::invalid_argument if x is not valid.
FinCategory theta(const FairSetCategory& x);
/// O = objects, A = arrows, U = identity arrows with u the inclusion.
/// Throws std::invalid_argument if c is not a valid category.
FairSetCategory fair_nerve(const FinCategory& c);

/// A morphism of fair Set-categories, as maps on O, A and U.
struct FairSetMorphism {
  std::vector<std::size_t> objects;
  std::vector<std::size_t> arrows;
  std::vector<std::size_t> units;
};

/// Whether m : a -> b preserves all structure and is bijective on O, A, U.
bool is_fair_isomorphism(const FairSetCategory& a, const FairSetCategory& b, const FairSetMorphism& m);

/// The unit X -> fair_nerve(theta(X)): identity on O and A, u on U.
FairSetMorphism fair_unit_comparison(const FairSetCategory& x);

/// Element of X at a coloured ordinal with n dots: the n - 1 entries of a
/// composable string of arrows, or the single object when n == 1.
using FairSimplex = std::vector<std::size_t>;

/// X(K): composable strings whose linked positions carry weak identities,
/// in lexicographic order of arrow indices.
std::vector<FairSimplex> evaluate_object(const FairSetCategory& x, const ColouredOrdinal& k);

/// The action of phi : K -> L sending a string over L to a string over K.
FairSimplex restrict_along(const FairSetCategory& x, const FatMap& phi, const FairSimplex& s);

struct EvaluatedMap {
  std::vector<FairSimplex> domain;    // X(L)
  std::vector<FairSimplex> codomain;  // X(K)
  std::vector<std::size_t> table;     // index into codomain for each element of domain

  bool is_bijective() const;
};

/// X(phi) : X(L) -> X(K). Throws std::invalid_argument if x is invalid.
EvaluatedMap evaluate_map(const FairSetCategory& x, const FatMap& phi);

/// Whether X(K ∔ L) -> X(K) x_O X(L) is a bijection.
bool segal_map_is_bijective(const FairSetCategory& x, const ColouredOrdinal& k, const ColouredOrdinal& l);

struct NerveCheck {
  bool ok = true;
  std::vector<std::size_t> level_sizes;  // classical nerve of theta(X), levels 0..N
  std::vector<std::string> failures;
};

/// Compares X at every coloured ordinal with at most levels + 1 dots to the
/// classical nerve of theta(X) at the projected level, along the vertical
/// map from the fully unlinked object.
NerveCheck underlying_nerve_check(const FairSetCategory& x, std::size_t levels);

}  // namespace fatdelta
