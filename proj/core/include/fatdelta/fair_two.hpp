#pragma once

// Fair categories in Cat (fair 2-categories). The A-part is a
// semi-2-category; each object carries a category U(x) of weak identity
// arrows with its own composition and a semi-functor into A(x,x).

#include <cstddef>
#include <string>
#include <vector>

#include "fatdelta/fincat.hpp"
#include "fatdelta/semi_two.hpp"

namespace fatdelta {

struct UnitPart {
  FinCategory category;                    // U(x)
  TensorTable tensor;                      // U(x) x U(x) -> U(x)
  std::vector<std::size_t> embed_objects;  // objects of U(x) -> 1-cells of A(x,x)
  std::vector<std::size_t> embed_arrows;   // arrows of U(x) -> 2-cells of A(x,x)

  std::size_t unit_tensor(std::size_t u, std::size_t v) const {
    return tensor.cells.at(u * category.object_count() + v);
  }
  std::size_t unit_tensor2(std::size_t a, std::size_t b) const {
    return tensor.two_cells.at(a * category.arrow_count() + b);
  }

  bool operator==(const UnitPart&) const = default;
};

struct FairTwoCategory {
  SemiTwoCategory arrows;
  std::vector<UnitPart> units;  // one per object

  bool operator==(const FairTwoCategory&) const = default;
};

struct FairTwoVerdict {
  Verdict verdict;
  bool is_fair_monoidal = false;

  bool ok() const { return verdict.ok(); }
};

/// Discreteness is structural; checks the semi-2-category laws, the unit
/// parts, contractibility of each U(x) and that the five colour functors
/// U(x) -> {x} (twice), U(x) x A(x,y) -> A(x,y), A(y,x) x U(x) -> A(y,x)
/// and U(x) x U(x) -> U(x) are equivalences.
FairTwoVerdict validate_fair_two(const FairTwoCategory& x);

enum class SliceKind { hom, unit };

/// A(x,y) for kind hom, U(x) for kind unit (y ignored). Throws
/// std::out_of_range for unknown objects.
FinCategory slice(const FairTwoCategory& x, SliceKind kind, const std::string& from, const std::string& to = {});

/// U(x) -> A(x,x) as a functor.
FinFunctor unit_embedding(const FairTwoCategory& x, std::size_t object);

/// Checks that tensoring with any weak identity induces bijections on the
/// 2-cell hom-sets of A(x,-) and A(-,x).
Verdict check_unit_translations(const FairTwoCategory& x);

/// The canonical fair 2-category of a semi-2-category with the given strict
/// identity 1-cells: each U(x) is terminal, embedded at identities[x].
FairTwoCategory fair_two_from_strict(const SemiTwoCategory& s, const std::vector<std::size_t>& identities);

/// The colour functor U(x) x A(x,y) -> A(x,y) (left) or A(y,x) x U(x) -> A(y,x).
FinFunctor unit_action_functor(const FairTwoCategory& x, std::size_t object, std::size_t other, bool left);

}  // namespace fatdelta
