#pragma once

// Semi-2-categories: finite hom categories with a strictly associative
// composition functor and no units. Composition is written (x) and goes
// from left to right: for X : a -> b and Y : b -> c, X (x) Y : a -> c.
// Both fair 2-categories and bicategories with strict composition law are
// built on this.

#include <cstddef>
#include <string>
#include <vector>

#include "fatdelta/fincat.hpp"

namespace fatdelta {

/// Composition table Hom(x,y) x Hom(y,z) -> Hom(x,z) on 1-cells and 2-cells.
/// Entries are row-major in the left factor; npos marks a missing entry.
struct TensorTable {
  std::vector<std::size_t> cells;
  std::vector<std::size_t> two_cells;

  bool operator==(const TensorTable&) const = default;
};

class SemiTwoCategory {
 public:
  SemiTwoCategory() = default;
  /// Empty homs and tensor tables sized for the given objects.
  explicit SemiTwoCategory(std::vector<std::string> objects);

  std::size_t object_count() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t object_index(const std::string& id) const;  // throws std::out_of_range

  const FinCategory& hom(std::size_t x, std::size_t y) const { return homs_.at(x * object_count() + y); }
  /// Replaces Hom(x,y); tensor tables whose shape changes are cleared to npos.
  void set_hom(std::size_t x, std::size_t y, FinCategory c);

  const TensorTable& table(std::size_t x, std::size_t y, std::size_t z) const;
  TensorTable& table(std::size_t x, std::size_t y, std::size_t z);

  /// a (x) b for 1-cells a in Hom(x,y), b in Hom(y,z); npos if missing.
  std::size_t tensor(std::size_t x, std::size_t y, std::size_t z, std::size_t a, std::size_t b) const;
  /// Horizontal composite of 2-cells; npos if missing.
  std::size_t tensor2(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha, std::size_t beta) const;
  void set_tensor(std::size_t x, std::size_t y, std::size_t z, std::size_t a, std::size_t b, std::size_t ab);
  void set_tensor2(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha, std::size_t beta,
                   std::size_t ab);

  /// Identity 2-cell of a 1-cell.
  std::size_t id2(std::size_t x, std::size_t y, std::size_t a) const { return hom(x, y).identity(a); }
  /// alpha (x) id_b and id_a (x) beta.
  std::size_t whisker_right(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha, std::size_t b) const;
  std::size_t whisker_left(std::size_t x, std::size_t y, std::size_t z, std::size_t a, std::size_t beta) const;

  bool operator==(const SemiTwoCategory&) const = default;

 private:
  std::size_t triple(std::size_t x, std::size_t y, std::size_t z) const {
    return (x * object_count() + y) * object_count() + z;
  }
  void reset_tables();

  std::vector<std::string> objects_;
  std::vector<FinCategory> homs_;
  std::vector<TensorTable> tables_;
};

/// Hom categories valid, tensor total and functorial (endpoints, identities,
/// interchange), strictly associative on 1-cells and 2-cells.
Verdict validate_semi_two(const SemiTwoCategory& s);

/// The functor Hom(x,y) x Hom(y,z) -> Hom(x,z) as a FinFunctor out of
/// binary_product.
FinFunctor tensor_functor(const SemiTwoCategory& s, std::size_t x, std::size_t y, std::size_t z);

}  // namespace fatdelta
