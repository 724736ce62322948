#include "fatdelta/fat_delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "text.hpp"

namespace fatdelta {

// ---------------------------------------------------------------------------
// ColouredOrdinal

ColouredOrdinal::ColouredOrdinal(std::size_t dots) {
  if (dots == 0) throw std::invalid_argument("coloured ordinal needs at least one dot");
  links_.assign(dots - 1, false);
}

ColouredOrdinal::ColouredOrdinal(std::vector<bool> links) : links_(std::move(links)) {}

ColouredOrdinal ColouredOrdinal::all_linked(std::size_t dots) {
  ColouredOrdinal k(dots);
  k.links_.assign(dots - 1, true);
  return k;
}

ColouredOrdinal ColouredOrdinal::parse(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty() || s.size() % 2 == 0)
    throw std::invalid_argument("malformed coloured ordinal `" + text + "`");
  std::vector<bool> links;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i % 2 == 0) {
      if (s[i] != 'o') throw std::invalid_argument("expected `o` in coloured ordinal `" + text + "`");
    } else if (s[i] == '-') {
      links.push_back(true);
    } else if (s[i] == '.') {
      links.push_back(false);
    } else {
      throw std::invalid_argument("expected `-` or `.` in coloured ordinal `" + text + "`");
    }
  }
  return ColouredOrdinal(std::move(links));
}

std::string ColouredOrdinal::to_string() const {
  std::string out = "o";
  for (bool l : links_) {
    out += l ? '-' : '.';
    out += 'o';
  }
  return out;
}

std::size_t ColouredOrdinal::components() const {
  return 1 + static_cast<std::size_t>(std::count(links_.begin(), links_.end(), false));
}

std::size_t ColouredOrdinal::component_of(std::size_t dot) const {
  if (dot >= dots()) throw std::out_of_range("component_of: dot out of range");
  return static_cast<std::size_t>(std::count(links_.begin(), links_.begin() + static_cast<std::ptrdiff_t>(dot), false));
}

std::vector<ColouredOrdinal> all_coloured_ordinals(std::size_t dots) {
  if (dots == 0) throw std::invalid_argument("all_coloured_ordinals: need at least one dot");
  std::vector<ColouredOrdinal> out;
  const std::size_t edges = dots - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
    std::vector<bool> links(edges);
    // most significant edge first so that ordering matches vector<bool> ordering
    for (std::size_t e = 0; e < edges; ++e) links[e] = (mask >> (edges - 1 - e)) & 1u;
    out.emplace_back(std::move(links));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maps

namespace detail {

bool link_condition_holds(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                          const std::vector<std::size_t>& images) {
  for (std::size_t i = 0; i + 1 < src.dots(); ++i) {
    if (!src.linked(i)) continue;
    for (std::size_t j = images[i]; j < images[i + 1]; ++j)
      if (!dst.linked(j)) return false;
  }
  return true;
}

namespace {

void check_images(const ColouredOrdinal& src, const ColouredOrdinal& dst, const std::vector<std::size_t>& images,
                  bool strict, const char* what) {
  const std::string name(what);
  if (images.size() != src.dots()) throw std::invalid_argument(name + ": wrong number of images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= dst.dots()) throw std::invalid_argument(name + ": image out of range");
    if (i > 0) {
      if (images[i - 1] > images[i]) throw std::invalid_argument(name + ": not monotone");
      if (strict && images[i - 1] == images[i]) throw std::invalid_argument(name + ": not injective on dots");
    }
  }
  if (!link_condition_holds(src, dst, images)) throw std::invalid_argument(name + ": breaks a link");
}

std::string map_to_string(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                          const std::vector<std::size_t>& images) {
  return src.to_string() + " -> " + dst.to_string() + " : " + images_to_string(images);
}

// Sub-object of K on the dots [first, last].
ColouredOrdinal restrict_to(const ColouredOrdinal& k, std::size_t first, std::size_t last) {
  return ColouredOrdinal(std::vector<bool>(k.links().begin() + static_cast<std::ptrdiff_t>(first),
                                           k.links().begin() + static_cast<std::ptrdiff_t>(last)));
}

}  // namespace
}  // namespace detail

TMap::TMap(ColouredOrdinal src, ColouredOrdinal dst, std::vector<std::size_t> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  detail::check_images(src_, dst_, images_, false, "TMap");
}

bool TMap::is_dot_injective() const {
  return std::adjacent_find(images_.begin(), images_.end()) == images_.end();
}

std::string TMap::to_string() const { return detail::map_to_string(src_, dst_, images_); }

FatMap::FatMap(ColouredOrdinal src, ColouredOrdinal dst, std::vector<std::size_t> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  detail::check_images(src_, dst_, images_, true, "FatMap");
}

FatMap FatMap::identity(const ColouredOrdinal& k) {
  std::vector<std::size_t> images(k.dots());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return {k, k, std::move(images)};
}

std::optional<FatMap> FatMap::try_make(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                                       const std::vector<std::size_t>& images) {
  if (images.size() != src.dots()) return std::nullopt;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= dst.dots()) return std::nullopt;
    if (i > 0 && images[i - 1] >= images[i]) return std::nullopt;
  }
  if (!detail::link_condition_holds(src, dst, images)) return std::nullopt;
  return FatMap(src, dst, images);
}

std::string FatMap::to_string() const { return detail::map_to_string(src_, dst_, images_); }

FatMap FatMap::parse(const std::string& text) {
  const auto parts = detail::split_map_text(text);
  return {ColouredOrdinal::parse(parts.src), ColouredOrdinal::parse(parts.dst), parts.images};
}

TMap parse_tmap(const std::string& text) {
  const auto parts = detail::split_map_text(text);
  return {ColouredOrdinal::parse(parts.src), ColouredOrdinal::parse(parts.dst), parts.images};
}

namespace {

// Depth-first enumeration of monotone sequences, pruning on the link
// condition edge by edge so that output stays lexicographic.
template <typename Emit>
void enumerate_maps(const ColouredOrdinal& k, const ColouredOrdinal& l, bool strict, Emit&& emit) {
  std::vector<std::size_t> images(k.dots());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == images.size()) {
      emit(images);
      return;
    }
    std::size_t lo = 0;
    if (i > 0) lo = images[i - 1] + (strict ? 1 : 0);
    // leave room for the remaining dots when injective
    const std::size_t remaining = strict ? images.size() - 1 - i : 0;
    if (l.dots() < remaining + 1) return;
    const std::size_t hi = l.dots() - 1 - remaining;
    for (std::size_t v = lo; v <= hi; ++v) {
      if (i > 0 && k.linked(i - 1)) {
        bool ok = true;
        for (std::size_t j = images[i - 1]; j < v && ok; ++j) ok = l.linked(j);
        if (!ok) break;  // larger v only spans more edges
      }
      images[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<FatMap> enum_hom_fat(const ColouredOrdinal& k, const ColouredOrdinal& l) {
  std::vector<FatMap> out;
  enumerate_maps(k, l, true, [&](const std::vector<std::size_t>& im) { out.emplace_back(k, l, im); });
  return out;
}

std::vector<TMap> enum_hom_t(const ColouredOrdinal& k, const ColouredOrdinal& l) {
  std::vector<TMap> out;
  enumerate_maps(k, l, false, [&](const std::vector<std::size_t>& im) { out.emplace_back(k, l, im); });
  return out;
}

FatMap compose_fat(const FatMap& f, const FatMap& g) {
  if (f.dst() != g.src())
    throw std::invalid_argument("compose_fat: codomain " + f.dst().to_string() + " != domain " +
                                g.src().to_string());
  std::vector<std::size_t> images(f.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(f(i));
  if (!detail::link_condition_holds(f.src(), g.dst(), images))
    throw std::logic_error("compose_fat: composite breaks a link (internal invariant)");
  return {f.src(), g.dst(), std::move(images)};
}

// ---------------------------------------------------------------------------
// Projection

Ordinal project(const ColouredOrdinal& k) { return Ordinal{k.components() - 1}; }

namespace {
DeltaMap project_images(const ColouredOrdinal& src, const ColouredOrdinal& dst,
                        const std::vector<std::size_t>& images) {
  std::vector<std::size_t> comp(src.components());
  for (std::size_t d = 0; d < src.dots(); ++d) comp[src.component_of(d)] = dst.component_of(images[d]);
  return {project(src), project(dst), std::move(comp)};
}
}  // namespace

DeltaMap project_map(const FatMap& f) { return project_images(f.src(), f.dst(), f.images()); }
DeltaMap project_map(const TMap& f) { return project_images(f.src(), f.dst(), f.images()); }

bool is_vertical(const FatMap& f) { return project_map(f).is_identity(); }

// ---------------------------------------------------------------------------
// Dot-sums and embeddings

ColouredOrdinal dotsum(const ColouredOrdinal& k, const ColouredOrdinal& l) {
  std::vector<bool> links = k.links();
  links.insert(links.end(), l.links().begin(), l.links().end());
  return ColouredOrdinal(std::move(links));
}

FatMap dotsum_maps(const FatMap& f, const FatMap& g) {
  // the dot is a strict unit for the sum
  if (f.src().dots() == 1 && f.is_identity()) return g;
  if (g.src().dots() == 1 && g.is_identity()) return f;
  if (f.images().back() != f.dst().dots() - 1)
    throw std::invalid_argument("dotsum_maps: first map must send last dot to last dot");
  if (g.images().front() != 0)
    throw std::invalid_argument("dotsum_maps: second map must send first dot to first dot");
  std::vector<std::size_t> images = f.images();
  const std::size_t shift = f.dst().dots() - 1;
  for (std::size_t i = 1; i < g.images().size(); ++i) images.push_back(g(i) + shift);
  return {dotsum(f.src(), g.src()), dotsum(f.dst(), g.dst()), std::move(images)};
}

FatMap embed(const DeltaMap& f, EmbedMode mode) {
  if (!f.is_mono()) throw std::invalid_argument("embed: map is not injective");
  const bool link = mode == EmbedMode::vertical;
  return {ColouredOrdinal(std::vector<bool>(f.src().n, link)), ColouredOrdinal(std::vector<bool>(f.dst().n, link)),
          f.images()};
}

// ---------------------------------------------------------------------------
// Epi squares

DeltaMap to_epi(const ColouredOrdinal& k) {
  std::vector<std::size_t> images(k.dots());
  for (std::size_t d = 0; d < k.dots(); ++d) images[d] = k.component_of(d);
  return {Ordinal{k.dots() - 1}, project(k), std::move(images)};
}

ColouredOrdinal from_epi(const DeltaMap& e) {
  if (!e.is_epi()) throw std::invalid_argument("from_epi: not an epimorphism");
  std::vector<bool> links(e.src().n);
  for (std::size_t i = 0; i < links.size(); ++i) links[i] = e(i) == e(i + 1);
  return ColouredOrdinal(std::move(links));
}

EpiSquare to_epi_square(const FatMap& f) {
  return {DeltaMap(Ordinal{f.src().dots() - 1}, Ordinal{f.dst().dots() - 1}, f.images()), project_map(f),
          to_epi(f.src()), to_epi(f.dst())};
}

std::vector<std::string> check_epi_square(const EpiSquare& sq) {
  std::vector<std::string> problems;
  if (!sq.top.is_mono()) problems.emplace_back("top arrow is not a monomorphism");
  if (!sq.src_epi.is_epi()) problems.emplace_back("source side is not an epimorphism");
  if (!sq.dst_epi.is_epi()) problems.emplace_back("target side is not an epimorphism");
  if (sq.src_epi.src() != sq.top.src() || sq.dst_epi.src() != sq.top.dst() || sq.bottom.src() != sq.src_epi.dst() ||
      sq.bottom.dst() != sq.dst_epi.dst()) {
    problems.emplace_back("square edges do not match up");
    return problems;
  }
  if (compose_delta(sq.top, sq.dst_epi) != compose_delta(sq.src_epi, sq.bottom))
    problems.emplace_back("square does not commute");
  return problems;
}

FatMap from_epi_square(const EpiSquare& sq) {
  const auto problems = check_epi_square(sq);
  if (!problems.empty()) throw std::invalid_argument("from_epi_square: " + problems.front());
  return {from_epi(sq.src_epi), from_epi(sq.dst_epi), sq.top.images()};
}

std::size_t count_epi_squares(const ColouredOrdinal& k, const ColouredOrdinal& l) {
  const DeltaMap es = to_epi(k);
  const DeltaMap et = to_epi(l);
  std::size_t count = 0;
  for (const DeltaMap& u : enum_hom_delta(es.src(), et.src())) {
    if (!u.is_mono()) continue;
    // a bottom arrow exists iff et . u is constant on the fibres of es;
    // it is then unique and automatically monotone
    bool ok = true;
    for (std::size_t i = 0; i + 1 < es.images().size() && ok; ++i)
      if (es(i) == es(i + 1)) ok = et(u(i)) == et(u(i + 1));
    if (ok) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Vertical arrows

FatMap generator_map(Generator g) {
  switch (g) {
    case Generator::g1: return FatMap::parse("o -> o-o : [0]");
    case Generator::g2: return FatMap::parse("o -> o-o : [1]");
    case Generator::g3: return FatMap::parse("o.o -> o-o.o : [0,2]");
    case Generator::g4: return FatMap::parse("o.o -> o.o-o : [0,2]");
    case Generator::g5: return FatMap::parse("o-o -> o-o-o : [0,2]");
  }
  throw std::invalid_argument("unknown generator");
}

std::vector<FatMap> vertical_generators() {
  return {generator_map(Generator::g1), generator_map(Generator::g2), generator_map(Generator::g3),
          generator_map(Generator::g4), generator_map(Generator::g5)};
}

FatMap elementary_vertical(const ColouredOrdinal& source, Generator g, std::size_t position) {
  const FatMap gen = generator_map(g);
  const std::size_t span = gen.src().dots();
  if (position + span > source.dots())
    throw std::invalid_argument("elementary_vertical: generator does not fit at this position");
  if (detail::restrict_to(source, position, position + span - 1) != gen.src())
    throw std::invalid_argument("elementary_vertical: source does not match the generator there");
  // the one-dot object is the unit for the dot sum; g1 and g2 only glue on one side
  FatMap out = gen;
  if (position > 0) out = dotsum_maps(FatMap::identity(detail::restrict_to(source, 0, position)), out);
  if (position + span < source.dots())
    out = dotsum_maps(out, FatMap::identity(detail::restrict_to(source, position + span - 1, source.dots() - 1)));
  return out;
}

std::vector<VerticalStep> vertical_decompose(const FatMap& f) {
  if (!is_vertical(f)) throw std::invalid_argument("vertical_decompose: map is not vertical");
  const ColouredOrdinal& target = f.dst();

  // The intermediate objects are the full sub-objects of the target on a
  // growing set of dots; two consecutive chosen dots are linked iff they lie
  // in the same target component.
  std::vector<bool> chosen(target.dots(), false);
  for (std::size_t v : f.images()) chosen[v] = true;
  auto current_object = [&] {
    std::vector<bool> links;
    std::size_t prev = target.dots();
    for (std::size_t d = 0; d < target.dots(); ++d) {
      if (!chosen[d]) continue;
      if (prev != target.dots()) links.push_back(target.component_of(prev) == target.component_of(d));
      prev = d;
    }
    return ColouredOrdinal(std::move(links));
  };

  std::vector<VerticalStep> steps;
  for (std::size_t d = 0; d < target.dots(); ++d) {
    if (chosen[d]) continue;
    const ColouredOrdinal before = current_object();
    // rank of the new dot among chosen dots after insertion
    std::size_t rank = 0;
    for (std::size_t e = 0; e < d; ++e) rank += chosen[e] ? 1 : 0;
    chosen[d] = true;
    const ColouredOrdinal after = current_object();

    Generator gen{};
    std::size_t position = 0;
    if (rank == 0) {
      gen = Generator::g2;
      position = 0;
    } else if (rank == before.dots()) {
      gen = Generator::g1;
      position = before.dots() - 1;
    } else {
      position = rank - 1;
      if (before.linked(rank - 1))
        gen = Generator::g5;
      else
        gen = after.linked(rank - 1) ? Generator::g3 : Generator::g4;
    }
    FatMap step = elementary_vertical(before, gen, position);
    if (step.dst() != after) throw std::logic_error("vertical_decompose: step target mismatch (internal invariant)");
    steps.push_back({gen, position, std::move(step)});
  }
  return steps;
}

}  // namespace fatdelta
