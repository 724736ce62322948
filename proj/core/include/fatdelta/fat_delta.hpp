#pragma once

// Coloured ordinals, the category T of coloured ordinals, and the fat delta
// (its dot-injective part).
//
// A coloured ordinal is a column of dots where some consecutive edges are
// linked. Maps send dots to dots monotonically; a linked edge of the source
// must land on a run of linked edges in the target. Fat maps are the maps
// that are also injective on dots.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fatdelta/ordinal.hpp"

namespace fatdelta {

class ColouredOrdinal {
 public:
  /// `dots` dots, nothing linked. Throws std::invalid_argument if dots == 0.
  explicit ColouredOrdinal(std::size_t dots = 1);
  /// Edge i joins dot i and dot i + 1.
  explicit ColouredOrdinal(std::vector<bool> links);

  static ColouredOrdinal all_linked(std::size_t dots);

  /// Grammar `o ( ('-' | '.') o )*`, whitespace ignored.
  static ColouredOrdinal parse(const std::string& text);
  std::string to_string() const;

  std::size_t dots() const { return links_.size() + 1; }
  const std::vector<bool>& links() const { return links_; }
  bool linked(std::size_t edge) const { return links_.at(edge); }

  /// Number of linked components (equi-connected components).
  std::size_t components() const;
  /// Index of the component containing `dot`.
  std::size_t component_of(std::size_t dot) const;

  bool operator==(const ColouredOrdinal&) const = default;
  auto operator<=>(const ColouredOrdinal& other) const {
    if (auto c = dots() <=> other.dots(); c != 0) return c;
    return links_ <=> other.links_;
  }

 private:
  std::vector<bool> links_;
};

/// All coloured ordinals with the given number of dots (2^(dots-1) of them),
/// ordered by their link vectors.
std::vector<ColouredOrdinal> all_coloured_ordinals(std::size_t dots);

namespace detail {
bool link_condition_holds(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                          const std::vector<std::size_t>& images);
}

/// An arrow of T: weakly monotone on dots, links may be set but not broken.
class TMap {
 public:
  /// Throws std::invalid_argument on any invariant violation.
  TMap(ColouredOrdinal src, ColouredOrdinal dst, std::vector<std::size_t> images);

  const ColouredOrdinal& src() const { return src_; }
  const ColouredOrdinal& dst() const { return dst_; }
  const std::vector<std::size_t>& images() const { return images_; }

  /// Whether this map is injective on dots, i.e. lives in the fat delta.
  bool is_dot_injective() const;

  std::string to_string() const;
  bool operator==(const TMap&) const = default;

 private:
  ColouredOrdinal src_;
  ColouredOrdinal dst_;
  std::vector<std::size_t> images_;
};

/// An arrow of the fat delta.
class FatMap {
 public:
  /// Throws std::invalid_argument unless images are strictly increasing, in
  /// range, and satisfy the link condition.
  FatMap(ColouredOrdinal src, ColouredOrdinal dst, std::vector<std::size_t> images);

  static FatMap identity(const ColouredOrdinal& k);
  static FatMap parse(const std::string& text);
  static std::optional<FatMap> try_make(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                                        const std::vector<std::size_t>& images);

  const ColouredOrdinal& src() const { return src_; }
  const ColouredOrdinal& dst() const { return dst_; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }

  bool is_identity() const { return src_ == dst_ && *this == identity(src_); }
  TMap as_tmap() const { return {src_, dst_, images_}; }

  /// Textual form `SRC -> DST : [i0,...]`.
  std::string to_string() const;

  bool operator==(const FatMap&) const = default;

 private:
  ColouredOrdinal src_;
  ColouredOrdinal dst_;
  std::vector<std::size_t> images_;
};

TMap parse_tmap(const std::string& text);

/// All fat maps K -> L in lexicographic order of image sequences.
std::vector<FatMap> enum_hom_fat(const ColouredOrdinal& k, const ColouredOrdinal& l);
/// All maps of T from K to L (weakly monotone), lexicographic.
std::vector<TMap> enum_hom_t(const ColouredOrdinal& k, const ColouredOrdinal& l);

/// g after f. Throws std::invalid_argument on a domain/codomain mismatch.
FatMap compose_fat(const FatMap& f, const FatMap& g);

/// Contract links: the ordinal of components.
Ordinal project(const ColouredOrdinal& k);
DeltaMap project_map(const FatMap& f);
DeltaMap project_map(const TMap& f);

/// Whether the projection of f is an identity.
bool is_vertical(const FatMap& f);

ColouredOrdinal dotsum(const ColouredOrdinal& k, const ColouredOrdinal& l);
/// Induced map on pushouts. Requires f to preserve the last dot and g the
/// first dot; throws std::invalid_argument otherwise. A one-dot identity on
/// either side is a strict unit and returns the other map unchanged.
FatMap dotsum_maps(const FatMap& f, const FatMap& g);

enum class EmbedMode { horizontal, vertical };

/// The inclusions of monomorphisms of Delta into the fat delta: horizontal
/// leaves everything unlinked, vertical links everything. Throws
/// std::invalid_argument if f is not injective.
FatMap embed(const DeltaMap& f, EmbedMode mode);

/// Commutative square in Delta: top is mono, the sides are epis and
/// dst_epi . top == bottom . src_epi.
struct EpiSquare {
  DeltaMap top;
  DeltaMap bottom;
  DeltaMap src_epi;
  DeltaMap dst_epi;

  bool operator==(const EpiSquare&) const = default;
};

/// Reasons an EpiSquare is ill-formed; empty when it is well-formed.
std::vector<std::string> check_epi_square(const EpiSquare& sq);

/// The component epi of K: dots(K)-1 ->> components(K)-1.
DeltaMap to_epi(const ColouredOrdinal& k);
/// Inverse of to_epi. Throws std::invalid_argument if e is not an epi.
ColouredOrdinal from_epi(const DeltaMap& e);

EpiSquare to_epi_square(const FatMap& f);
/// Throws std::invalid_argument if the square is ill-formed.
FatMap from_epi_square(const EpiSquare& sq);

/// Number of valid epi-squares between the epis of K and L, counted directly
/// in Delta without going through the link condition.
std::size_t count_epi_squares(const ColouredOrdinal& k, const ColouredOrdinal& l);

enum class Generator { g1 = 1, g2, g3, g4, g5 };

/// g1 = [0]: o -> o-o, g2 = [1]: o -> o-o, g3 = [0,2]: o.o -> o-o.o,
/// g4 = [0,2]: o.o -> o.o-o, g5 = [0,2]: o-o -> o-o-o.
FatMap generator_map(Generator g);
std::vector<FatMap> vertical_generators();

/// One elementary vertical arrow: the generator dot-summed with identities so
/// that its source is glued at dot `position` of the step's source.
struct VerticalStep {
  Generator generator;
  std::size_t position;
  FatMap map;

  bool operator==(const VerticalStep&) const = default;
};

/// The elementary arrow id_left ∔ g ∔ id_right with the generator's source
/// starting at dot `position` of `source`. Throws std::invalid_argument if
/// the generator does not fit there.
FatMap elementary_vertical(const ColouredOrdinal& source, Generator g, std::size_t position);

/// Decomposes a vertical map into elementary steps, inserting the missing
/// target dots bottom to top. The composite of the steps equals f.
/// Throws std::invalid_argument if f is not vertical.
std::vector<VerticalStep> vertical_decompose(const FatMap& f);

}  // namespace fatdelta
