#pragma once

// Finite categories given by explicit composition tables, finite functors,
// and the discrete-objects toolkit (components, truncation, discrete
// categories, fibre products over discrete categories).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fatdelta {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Violations found by a validator; empty means valid.
struct Verdict {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const Verdict& other, const std::string& prefix = {});
};

/// A finite category. Objects and arrows carry opaque string identifiers and
/// are addressed by index. Composition is diagrammatic: compose(f, g) is
/// "f then g". The same type doubles as a semi-category when identities are
/// left unset.
class FinCategory {
 public:
  std::size_t add_object(std::string id);
  std::size_t add_arrow(std::string id, std::size_t src, std::size_t tgt);
  /// Pass npos to clear.
  void set_identity(std::size_t object, std::size_t arrow);
  /// Pass npos as fg to remove the entry.
  void set_compose(std::size_t f, std::size_t g, std::size_t fg);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_id(std::size_t x) const { return objects_.at(x); }
  const std::string& arrow_id(std::size_t a) const { return arrows_.at(a).id; }
  std::size_t src(std::size_t a) const { return arrows_.at(a).src; }
  std::size_t tgt(std::size_t a) const { return arrows_.at(a).tgt; }
  /// npos when unset.
  std::size_t identity(std::size_t x) const { return identities_.at(x); }
  bool has_identities() const;

  /// f then g, or npos when the table has no entry.
  std::size_t compose(std::size_t f, std::size_t g) const;
  /// Like compose() but throws std::logic_error if undefined.
  std::size_t then(std::size_t f, std::size_t g) const;

  std::optional<std::size_t> find_object(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  std::size_t object_index(const std::string& id) const;  // throws std::out_of_range
  std::size_t arrow_index(const std::string& id) const;   // throws std::out_of_range

  /// Arrows x -> y in index order.
  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const;
  bool is_identity_arrow(std::size_t a) const;
  /// Two-sided inverse of a, if any.
  std::optional<std::size_t> inverse(std::size_t a) const;

  bool operator==(const FinCategory& other) const;

 private:
  struct ArrowData {
    std::string id;
    std::size_t src;
    std::size_t tgt;
    bool operator==(const ArrowData&) const = default;
  };
  static std::uint64_t key(std::size_t f, std::size_t g) {
    return (static_cast<std::uint64_t>(f) << 32) | static_cast<std::uint64_t>(g);
  }

  std::vector<std::string> objects_;
  std::vector<ArrowData> arrows_;
  std::vector<std::size_t> identities_;
  std::unordered_map<std::uint64_t, std::size_t> compose_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
};

/// A functor given by index maps on objects and arrows.
struct FinFunctor {
  FinCategory src;
  FinCategory dst;
  std::vector<std::size_t> obj_map;
  std::vector<std::size_t> arr_map;

  static FinFunctor identity(const FinCategory& c);
};

/// Checks the semi-category laws: endpoints in range, composition total on
/// composable pairs with the right endpoints, associativity.
Verdict validate_semi(const FinCategory& c);
/// Semi-category laws plus identities (endo, left and right neutral).
Verdict validate(const FinCategory& c);
/// Both categories valid, maps total, endpoints, identities and composition preserved.
Verdict validate(const FinFunctor& f);

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);
/// Bijective on objects and arrows (and a valid functor).
bool is_isomorphism(const FinFunctor& f);

/// A quotient of the object set.
struct ObjectQuotient {
  std::vector<std::string> classes;   // representative id of each class, in order of first appearance
  std::vector<std::size_t> class_of;  // object index -> class index
};

/// Connected components under zigzags of arrows.
ObjectQuotient pi0(const FinCategory& c);

struct Truncation {
  ObjectQuotient classes;               // isomorphism classes
  std::vector<std::size_t> to_components;  // iso class -> component of pi0
};

/// Isomorphism classes of objects with the comparison to components.
Truncation tau0(const FinCategory& c);

/// The discrete category on the given set (only identity arrows).
FinCategory delta_discrete(const std::vector<std::string>& index_set);
/// Whether c has only identity arrows.
bool is_discrete(const FinCategory& c);

FinCategory terminal_category();
FinCategory empty_category();
/// The ordinal n as a category (the poset 0 < 1 < ... < n).
FinCategory ordinal_category(std::size_t n);

/// Product category; object and arrow ids are "l:r".
FinCategory binary_product(const FinCategory& a, const FinCategory& b);
/// The two projections out of binary_product(a, b).
FinFunctor product_projection(const FinCategory& a, const FinCategory& b, int side);
/// A functor out of binary_product(a, b) given on index pairs.
FinFunctor functor_from_product(const FinCategory& a, const FinCategory& b, const FinCategory& dst,
                                const std::function<std::size_t(std::size_t, std::size_t)>& on_objects,
                                const std::function<std::size_t(std::size_t, std::size_t)>& on_arrows);
/// Disjoint sum; ids are prefixed "inl." and "inr.".
FinCategory binary_coproduct(const FinCategory& a, const FinCategory& b);
FinFunctor coproduct_injection(const FinCategory& a, const FinCategory& b, int side);
/// Coproduct of a family; ids are prefixed "<i>." where i is the position.
FinCategory coproduct(const std::vector<FinCategory>& family);

/// Full subcategory on the given objects (in the given order).
FinCategory full_subcategory(const FinCategory& c, const std::vector<std::size_t>& objects);

/// Fibres of a functor into a discrete category, one per object of the
/// codomain, in codomain order. Throws std::invalid_argument if the
/// codomain is not discrete.
std::vector<FinCategory> decompose_over_discrete(const FinFunctor& f);

struct FibreProduct {
  FinCategory category;
  FinFunctor left;   // projection to the domain of the first functor
  FinFunctor right;  // projection to the domain of the second functor
};

/// A x_{delta I} B, computed as the sum over i of A_i x B_i; ids are "a:b".
/// Throws std::invalid_argument if the codomains differ or are not discrete.
FibreProduct fibre_product_over_discrete(const FinFunctor& f, const FinFunctor& g);

/// The mediating functor T -> A x_I B for a cone (p, q) with f p = g q.
/// Throws std::invalid_argument if the cone does not commute.
FinFunctor mediate(const FibreProduct& fp, const FinFunctor& p, const FinFunctor& q);

struct EquimorphismReport {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool equimorphism = false;
};

EquimorphismReport equimorphism_report(const FinFunctor& f);

/// Nonempty with every hom-set a singleton.
bool is_contractible(const FinCategory& c);

/// Builds a functor between categories from id-to-id maps. Throws
/// std::out_of_range on unknown ids.
FinFunctor functor_from_ids(const FinCategory& src, const FinCategory& dst,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& arrows);

/// The classical nerve level k: composable strings of k arrows (objects when k = 0).
std::vector<std::vector<std::size_t>> nerve_level(const FinCategory& c, std::size_t k);

}  // namespace fatdelta
