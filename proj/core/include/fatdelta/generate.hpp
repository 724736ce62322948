#pragma once

// Seeded random instances and the fixed example corpus. Draws use
// `rng() % n` on std::mt19937_64 so sequences are identical across
// standard libraries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fatdelta/bicat.hpp"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/fincat.hpp"

namespace fatdelta::gen {

using Rng = std::mt19937_64;

/// Uniform in [0, n); n must be positive.
std::size_t below(Rng& rng, std::size_t n);

/// 1 to max_dots dots, links uniform.
ColouredOrdinal random_coloured_ordinal(Rng& rng, std::size_t max_dots);

/// A concrete category: objects are small finite sets and arrows a
/// composition-closed family of functions between them. At most
/// max_objects objects and max_arrows arrows.
FinCategory random_category(Rng& rng, std::size_t max_objects = 4, std::size_t max_arrows = 12);

/// A functor into delta_discrete of `labels` points, constant on components.
FinFunctor random_functor_to_discrete(Rng& rng, const FinCategory& c, std::size_t labels);

/// fair_nerve of a random category with units renamed "u_<object>".
FairSetCategory random_fair_set(Rng& rng, std::size_t max_objects = 4, std::size_t max_arrows = 12);

/// Like random_fair_set but each unit carrier is a random endomorphism of its
/// base, or with probability 1/4 any arrow, so the result may or may not be
/// valid.
FairSetCategory random_fair_set_candidate(Rng& rng, std::size_t max_objects = 4, std::size_t max_arrows = 12);

/// One object, arrows a0..a(n-1) with a;b = a, unit carrier a0. A valid
/// semi-category that is not a fair category.
FairSetCategory left_zero_semigroup(std::size_t n);

/// Hom(x,y) discrete on the arrows x -> y of c, strict units at identities.
StrictCompBicategory locally_discrete(const FinCategory& c);

/// Hom(x,y) is the codiscrete groupoid on the arrows x -> y of c; every
/// endomorphism is a weak unit. Chosen units sit at the identities.
StrictCompBicategory codiscrete_bicategory(const FinCategory& c);

/// One object, 1-cells Z/n under addition, codiscrete 2-cells. For n = 2 this
/// is the two-unit example; the chosen unit is 0 or, with shifted, 1.
StrictCompBicategory codiscrete_cyclic(std::size_t n, bool shifted = false);

/// One object, one 1-cell, 2-cells Z/n under addition both ways.
StrictCompBicategory two_group(std::size_t n);

/// One object, the poset 0 < ... < k as hom category, tensor max (unit 0)
/// or min (unit k).
StrictCompBicategory chain_monoidal(std::size_t k, bool use_max);

/// Componentwise product of two one-object bicategories.
StrictCompBicategory monoidal_product(const StrictCompBicategory& a, const StrictCompBicategory& b);

/// The fixed round-trip corpus plus `random_extra` codiscrete and locally
/// discrete bicategories from random categories with at most 2 objects.
std::vector<StrictCompBicategory> bicategory_corpus(Rng& rng, std::size_t random_extra);

}  // namespace fatdelta::gen
