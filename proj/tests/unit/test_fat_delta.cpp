#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/generate.hpp"
#include "oracles.hpp"

using namespace fatdelta;

namespace {
ColouredOrdinal co(const char* s) { return ColouredOrdinal::parse(s); }
FatMap fm(const char* s, const char* t, std::vector<std::size_t> im) { return FatMap(co(s), co(t), std::move(im)); }

std::vector<ColouredOrdinal> objects_up_to(std::size_t dots) {
  std::vector<ColouredOrdinal> out;
  for (std::size_t d = 1; d <= dots; ++d)
    for (auto& k : all_coloured_ordinals(d)) out.push_back(k);
  return out;
}

// Square count straight from the definition: monos u of the dot sets with
// e_L . u constant on the fibres of e_K, which then fixes the bottom map.
std::size_t squares_by_definition(const ColouredOrdinal& k, const ColouredOrdinal& l) {
  const auto ek = oracle::component_map(k.links());
  const auto el = oracle::component_map(l.links());
  std::size_t n = 0;
  for (const auto& u : oracle::all_functions(k.dots(), l.dots())) {
    if (!oracle::strictly_increasing(u)) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < k.dots(); ++i)
      if (ek[i] == ek[i + 1] && el[u[i]] != el[u[i + 1]]) ok = false;
    n += ok ? 1 : 0;
  }
  return n;
}
}  // namespace

TEST_CASE("coloured ordinal text") {
  CHECK(co("o.o-o").dots() == 3);
  CHECK(co("o . o - o") == co("o.o-o"));
  CHECK(co("o.o-o").to_string() == "o.o-o");
  CHECK_THROWS_AS(co(""), std::invalid_argument);
  CHECK_THROWS_AS(co("o--o"), std::invalid_argument);
  CHECK_THROWS_AS(co("o-"), std::invalid_argument);
  CHECK_THROWS_AS(ColouredOrdinal(0), std::invalid_argument);
}

TEST_CASE("object counts are powers of two") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(all_coloured_ordinals(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("enum_hom_fat examples") {
  auto a = enum_hom_fat(co("o"), co("o-o"));
  REQUIRE(a.size() == 2);
  CHECK(a[0].images() == oracle::Seq{0});
  CHECK(a[1].images() == oracle::Seq{1});
  CHECK(enum_hom_fat(co("o-o"), co("o.o")).empty());
  auto c = enum_hom_fat(co("o-o"), co("o-o-o"));
  REQUIRE(c.size() == 3);
  CHECK(c[0].images() == oracle::Seq{0, 1});
  CHECK(c[1].images() == oracle::Seq{0, 2});
  CHECK(c[2].images() == oracle::Seq{1, 2});
}

TEST_CASE("enum_hom_fat and enum_hom_t match brute force") {
  const auto objs = objects_up_to(4);
  for (const auto& k : objs)
    for (const auto& l : objs) {
      auto fat = enum_hom_fat(k, l);
      auto want = oracle::coloured_hom(k.to_string(), l.to_string(), true);
      REQUIRE(fat.size() == want.size());
      for (std::size_t i = 0; i < fat.size(); ++i) CHECK(fat[i].images() == want[i]);
      auto t = enum_hom_t(k, l);
      auto want_t = oracle::coloured_hom(k.to_string(), l.to_string(), false);
      REQUIRE(t.size() == want_t.size());
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].images() == want_t[i]);
    }
}

TEST_CASE("dot collapse is a map of T but not of the fat delta") {
  CHECK_NOTHROW(TMap(co("o.o"), co("o"), {0, 0}));
  CHECK_FALSE(TMap(co("o.o"), co("o"), {0, 0}).is_dot_injective());
  CHECK_THROWS_AS(FatMap(co("o.o"), co("o"), {0, 0}), std::invalid_argument);
  CHECK_FALSE(FatMap::try_make(co("o.o"), co("o"), {0, 0}).has_value());
}

TEST_CASE("compose_fat") {
  const FatMap f = fm("o-o", "o-o-o", {0, 2});
  CHECK(compose_fat(FatMap::identity(co("o-o")), f) == f);
  CHECK(compose_fat(f, FatMap::identity(co("o-o-o"))) == f);
  CHECK(compose_fat(fm("o", "o-o", {0}), f) == fm("o", "o-o-o", {0}));
  CHECK(compose_fat(fm("o", "o-o", {1}), fm("o-o", "o-o.o", {0, 1})) == fm("o", "o-o.o", {1}));
  CHECK_THROWS_AS(compose_fat(f, f), std::invalid_argument);
}

TEST_CASE("compose_fat agrees with pointwise composition") {
  const auto objs = objects_up_to(3);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs)
        for (const auto& f : enum_hom_fat(a, b))
          for (const auto& g : enum_hom_fat(b, c))
            CHECK(compose_fat(f, g).images() == oracle::compose(f.images(), g.images()));
}

TEST_CASE("projection") {
  CHECK(project(co("o-o")) == Ordinal{0});
  CHECK(project(co("o.o-o")) == Ordinal{1});
  CHECK(project_map(fm("o.o", "o-o.o", {0, 2})) == DeltaMap::identity({1}));
}

TEST_CASE("projection is functorial and matches component tracing") {
  const auto objs = objects_up_to(3);
  for (const auto& a : objs) {
    CHECK(project(a).dots() == oracle::count_distinct(oracle::component_map(a.links())));
    CHECK(project_map(FatMap::identity(a)).is_identity());
    for (const auto& b : objs)
      for (const auto& f : enum_hom_fat(a, b)) {
        const auto ca = oracle::component_map(a.links());
        const auto cb = oracle::component_map(b.links());
        const auto pf = project_map(f);
        for (std::size_t i = 0; i < a.dots(); ++i) CHECK(pf(ca[i]) == cb[f(i)]);
        for (const auto& c : objs)
          for (const auto& g : enum_hom_fat(b, c))
            CHECK(project_map(compose_fat(f, g)) == compose_delta(pf, project_map(g)));
      }
  }
}

TEST_CASE("verticality") {
  CHECK(is_vertical(fm("o", "o-o", {0})));
  CHECK_FALSE(is_vertical(fm("o", "o.o", {0})));
  for (const auto& k : objects_up_to(4)) CHECK(is_vertical(FatMap::identity(k)));
}

TEST_CASE("vertical maps are closed under composition") {
  const auto objs = objects_up_to(4);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : enum_hom_fat(a, b)) {
        if (!is_vertical(f)) continue;
        for (const auto& c : objs)
          for (const auto& g : enum_hom_fat(b, c))
            if (is_vertical(g)) CHECK(is_vertical(compose_fat(f, g)));
      }
}

TEST_CASE("dotsum") {
  CHECK(dotsum(co("o.o"), co("o-o")) == co("o.o-o"));
  CHECK(dotsum(co("o"), co("o")) == co("o"));
  const FatMap g1 = fm("o", "o-o", {1});
  CHECK(dotsum_maps(FatMap::identity(co("o")), g1) == g1);
  CHECK_THROWS_AS(dotsum_maps(fm("o", "o-o", {0}), g1), std::invalid_argument);
}

TEST_CASE("dotsum is associative and commutes with projection") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto k = gen::random_coloured_ordinal(rng, 5);
    const auto l = gen::random_coloured_ordinal(rng, 5);
    const auto m = gen::random_coloured_ordinal(rng, 5);
    CHECK(dotsum(dotsum(k, l), m) == dotsum(k, dotsum(l, m)));
    const auto s = dotsum(k, l);
    CHECK(s.dots() == k.dots() + l.dots() - 1);
    CHECK(project(s) == dotsum_delta(project(k), project(l)).sum);
  }
}

TEST_CASE("dotsum_maps matches the pushout and preserves verticality") {
  const auto objs = objects_up_to(3);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : enum_hom_fat(a, b)) {
        if (f(a.dots() - 1) != b.dots() - 1) continue;
        for (const auto& c : objs)
          for (const auto& d : objs)
            for (const auto& g : enum_hom_fat(c, d)) {
              if (g(0) != 0) continue;
              const FatMap s = dotsum_maps(f, g);
              CHECK(s.src() == dotsum(a, c));
              CHECK(s.dst() == dotsum(b, d));
              for (std::size_t i = 0; i < a.dots(); ++i) CHECK(s(i) == f(i));
              for (std::size_t i = 0; i < c.dots(); ++i) CHECK(s(a.dots() - 1 + i) == b.dots() - 1 + g(i));
              if (is_vertical(f) && is_vertical(g)) CHECK(is_vertical(s));
            }
      }
}

TEST_CASE("embed") {
  CHECK(embed(DeltaMap({1}, {2}, {0, 2}), EmbedMode::horizontal) == fm("o.o", "o.o.o", {0, 2}));
  CHECK(embed(DeltaMap::identity({1}), EmbedMode::vertical) == FatMap::identity(co("o-o")));
  CHECK(embed(DeltaMap({1}, {2}, {0, 1}), EmbedMode::vertical) == fm("o-o", "o-o-o", {0, 1}));
  CHECK_THROWS_AS(embed(DeltaMap({1}, {0}, {0, 0}), EmbedMode::vertical), std::invalid_argument);
}

TEST_CASE("embed is functorial and the horizontal projection is the inclusion") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : enum_hom_delta({a}, {b})) {
        if (!f.is_mono()) continue;
        CHECK(project_map(embed(f, EmbedMode::horizontal)) == f);
        for (std::size_t c = 0; c <= 3; ++c)
          for (const auto& g : enum_hom_delta({b}, {c})) {
            if (!g.is_mono()) continue;
            for (auto mode : {EmbedMode::horizontal, EmbedMode::vertical})
              CHECK(embed(compose_delta(f, g), mode) == compose_fat(embed(f, mode), embed(g, mode)));
          }
      }
}

TEST_CASE("epi-square conversion") {
  CHECK(to_epi(co("o-o")) == DeltaMap({1}, {0}, {0, 0}));
  CHECK(to_epi(co("o.o")) == DeltaMap::identity({1}));
  const auto sq = to_epi_square(fm("o.o", "o-o.o", {0, 2}));
  CHECK(sq.top == DeltaMap({1}, {2}, {0, 2}));
  CHECK(sq.bottom == DeltaMap::identity({1}));
  CHECK(check_epi_square(sq).empty());

  EpiSquare bad = sq;
  bad.top = DeltaMap({1}, {2}, {0, 1});
  CHECK_FALSE(check_epi_square(bad).empty());
  CHECK_THROWS_AS(from_epi_square(bad), std::invalid_argument);
  CHECK_THROWS_AS(from_epi(DeltaMap({0}, {1}, {0})), std::invalid_argument);
}

TEST_CASE("epi-square round trips") {
  const auto objs = objects_up_to(4);
  for (const auto& k : objs) {
    CHECK(from_epi(to_epi(k)) == k);
    for (const auto& l : objs)
      for (const auto& f : enum_hom_fat(k, l)) CHECK(from_epi_square(to_epi_square(f)) == f);
  }
}

TEST_CASE("fat hom counts agree with epi-square counts") {
  const auto objs = objects_up_to(4);
  for (const auto& k : objs)
    for (const auto& l : objs) {
      const auto n = enum_hom_fat(k, l).size();
      CHECK(n == count_epi_squares(k, l));
      CHECK(n == squares_by_definition(k, l));
    }
}

TEST_CASE("vertical generators") {
  const auto gens = vertical_generators();
  REQUIRE(gens.size() == 5);
  CHECK(gens[0] == fm("o", "o-o", {0}));
  CHECK(gens[1] == fm("o", "o-o", {1}));
  CHECK(gens[2] == fm("o.o", "o-o.o", {0, 2}));
  CHECK(gens[3] == fm("o.o", "o.o-o", {0, 2}));
  CHECK(gens[4] == fm("o-o", "o-o-o", {0, 2}));
  for (const auto& g : gens) {
    CHECK(is_vertical(g));
    CHECK(detail::link_condition_holds(g.src(), g.dst(), g.images()));
    CHECK(oracle::links_preserved(g.src().links(), g.dst().links(), g.images()));
  }
  CHECK(gens[4].src().components() == 1);
  CHECK(gens[4].dst().components() == 1);
}

TEST_CASE("vertical_decompose examples") {
  CHECK(vertical_decompose(FatMap::identity(co("o.o-o"))).empty());
  auto g3 = vertical_decompose(generator_map(Generator::g3));
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].generator == Generator::g3);
  CHECK(g3[0].position == 0);

  const FatMap f = fm("o-o", "o-o-o-o", {0, 3});
  auto steps = vertical_decompose(f);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].generator == Generator::g5);
  CHECK(steps[1].generator == Generator::g5);

  const FatMap h = fm("o.o", "o-o.o-o", {0, 2});
  CHECK(is_vertical(h));
  auto hs = vertical_decompose(h);
  REQUIRE(hs.size() == 2);
  CHECK(hs[0].generator == Generator::g3);
  CHECK(hs[0].position == 0);
  CHECK(hs[1].generator == Generator::g1);
  CHECK(hs[1].position == 2);

  CHECK_THROWS_AS(vertical_decompose(fm("o", "o.o", {0})), std::invalid_argument);
}

TEST_CASE("vertical_decompose recomposes for all vertical maps up to five dots") {
  const auto objs = objects_up_to(5);
  std::size_t seen = 0;
  for (const auto& k : objs)
    for (const auto& l : objs)
      for (const auto& f : enum_hom_fat(k, l)) {
        if (!is_vertical(f)) continue;
        ++seen;
        FatMap acc = FatMap::identity(k);
        for (const auto& s : vertical_decompose(f)) {
          CHECK(s.map.src() == acc.dst());
          CHECK(s.map.dst().dots() == s.map.src().dots() + 1);
          CHECK(is_vertical(s.map));
          CHECK(s.map == elementary_vertical(s.map.src(), s.generator, s.position));
          acc = compose_fat(acc, s.map);
        }
        CHECK(acc == f);
      }
  CHECK(seen > 0);
}

TEST_CASE("elementary_vertical rejects generators that do not fit") {
  CHECK_THROWS_AS(elementary_vertical(co("o-o"), Generator::g3, 0), std::invalid_argument);
  CHECK_THROWS_AS(elementary_vertical(co("o.o"), Generator::g3, 1), std::invalid_argument);
}
