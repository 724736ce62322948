#pragma once

// The simplex category: nonempty finite ordinals and monotone maps.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fatdelta {

/// The ordinal n = {0 < 1 < ... < n}; it has n + 1 dots.
struct Ordinal {
  std::size_t n = 0;

  std::size_t dots() const { return n + 1; }
  auto operator<=>(const Ordinal&) const = default;
};

/// A weakly monotone map between ordinals, stored as its full image sequence.
class DeltaMap {
 public:
  /// Throws std::invalid_argument unless images has src.n + 1 entries, all
  /// in [0, dst.n], and weakly increasing.
  DeltaMap(Ordinal src, Ordinal dst, std::vector<std::size_t> images);

  static DeltaMap identity(Ordinal k);

  Ordinal src() const { return src_; }
  Ordinal dst() const { return dst_; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }

  bool is_identity() const;
  bool is_epi() const;   // surjective on dots
  bool is_mono() const;  // injective on dots

  /// Textual form `m -> n : [i0,i1,...]`.
  std::string to_string() const;

  bool operator==(const DeltaMap&) const = default;
  auto operator<=>(const DeltaMap& other) const {
    if (auto c = src_ <=> other.src_; c != 0) return c;
    if (auto c = dst_ <=> other.dst_; c != 0) return c;
    return images_ <=> other.images_;
  }

 private:
  Ordinal src_;
  Ordinal dst_;
  std::vector<std::size_t> images_;
};

/// All monotone maps m -> n in lexicographic order of image sequences.
std::vector<DeltaMap> enum_hom_delta(Ordinal m, Ordinal n);

/// g after f (f first). Throws std::invalid_argument if f.dst() != g.src().
DeltaMap compose_delta(const DeltaMap& f, const DeltaMap& g);

struct EpiMonoFactorization {
  DeltaMap epi;
  DeltaMap mono;
  bool input_is_epi;
  bool input_is_mono;
};

/// The unique factorization f = mono . epi through the image ordinal.
EpiMonoFactorization epi_mono_factor(const DeltaMap& f);

struct DeltaDotSum {
  Ordinal sum;
  DeltaMap left;   // bottom m + 1 dots
  DeltaMap right;  // shift by m
};

/// Pushout of m <- 0 -> n gluing the last dot of m to the first dot of n.
DeltaDotSum dotsum_delta(Ordinal m, Ordinal n);

/// Coface map d_i : n-1 -> n skipping i (requires n >= 1, i <= n).
DeltaMap coface(std::size_t n, std::size_t i);
/// Codegeneracy map s_i : n+1 -> n hitting i twice (requires i <= n).
DeltaMap codegeneracy(std::size_t n, std::size_t i);

/// Parses `m -> n : [i0,...]`. Throws std::invalid_argument on malformed text.
DeltaMap parse_delta_map(const std::string& text);

}  // namespace fatdelta
