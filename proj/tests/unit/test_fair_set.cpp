#include <random>
#include <stdexcept>

#include "builders.hpp"
#include "doctest.h"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/generate.hpp"
#include "oracles.hpp"

using namespace fatdelta;

namespace {

ColouredOrdinal co(const char* s) { return ColouredOrdinal::parse(s); }

bool is_carrier(const FairSetCategory& x, std::size_t a) {
  for (const auto& w : x.units)
    if (w.arrow == a) return true;
  return false;
}

// Composable strings over K with carriers at linked positions.
std::vector<FairSimplex> strings_over(const FairSetCategory& x, const ColouredOrdinal& k) {
  const FinCategory& c = x.arrows;
  std::vector<FairSimplex> out;
  if (k.dots() == 1) {
    for (std::size_t o = 0; o < c.object_count(); ++o) out.push_back({o});
    return out;
  }
  for (const auto& s : oracle::all_functions(k.dots() - 1, c.arrow_count())) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < s.size(); ++i) ok = c.tgt(s[i]) == c.src(s[i + 1]);
    for (std::size_t i = 0; ok && i < s.size(); ++i)
      if (k.linked(i)) ok = is_carrier(x, s[i]);
    if (ok) out.push_back(s);
  }
  return out;
}

// Restriction by composing the spanned entries; the one-dot case picks an object.
FairSimplex restrict_oracle(const FairSetCategory& x, const FatMap& phi, const FairSimplex& s) {
  const FinCategory& c = x.arrows;
  const std::size_t ldots = phi.dst().dots();
  auto object_at = [&](std::size_t j) {
    if (ldots == 1) return s[0];
    return j < s.size() ? c.src(s[j]) : c.tgt(s.back());
  };
  if (phi.src().dots() == 1) return {object_at(phi(0))};
  FairSimplex out;
  for (std::size_t i = 0; i + 1 < phi.src().dots(); ++i) {
    std::size_t acc = s[phi(i)];
    for (std::size_t j = phi(i) + 1; j < phi(i + 1); ++j) acc = c.then(acc, s[j]);
    out.push_back(acc);
  }
  return out;
}

std::vector<ColouredOrdinal> objects_up_to(std::size_t dots) {
  std::vector<ColouredOrdinal> out;
  for (std::size_t d = 1; d <= dots; ++d)
    for (auto& k : all_coloured_ordinals(d)) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("validate_fair_set examples") {
  const auto term = fair_nerve(terminal_category());
  const auto v = validate_fair_set(term);
  CHECK(v.ok());
  CHECK(v.is_fair_monoid);

  const auto z2 = fair_nerve(build::cyclic_group(2));
  const auto vz = validate_fair_set(z2);
  CHECK(vz.ok());
  CHECK(vz.is_fair_monoid);
  CHECK(vz.units_are_endo);
  CHECK(vz.units_strict);

  for (std::size_t carrier = 0; carrier < 2; ++carrier) {
    auto lz = gen::left_zero_semigroup(2);
    lz.units[0].arrow = carrier;
    const auto bad = validate_fair_set(lz);
    CHECK_FALSE(bad.ok());
    bool translation = false;
    for (const auto& s : bad.verdict.violations) translation |= s.find("translation") != std::string::npos;
    CHECK(translation);
  }

  CHECK_FALSE(validate_fair_set(fair_nerve(ordinal_category(1))).is_fair_monoid);
}

TEST_CASE("validate_fair_set rejects structural faults") {
  auto x = fair_nerve(ordinal_category(1));
  x.units.pop_back();
  CHECK_FALSE(validate_fair_set(x).ok());

  auto y = fair_nerve(ordinal_category(1));
  y.units[0].arrow = 1;  // the arrow 0 < 1 is not an endomorphism
  CHECK_FALSE(validate_fair_set(y).ok());

  auto z = fair_nerve(ordinal_category(1));
  z.units[1].object = 0;
  CHECK_FALSE(validate_fair_set(z).ok());
}

TEST_CASE("theta and fair_nerve examples") {
  CHECK(theta(fair_nerve(terminal_category())) == terminal_category());
  const auto one = ordinal_category(1);
  const auto n1 = fair_nerve(one);
  CHECK(n1.arrows.object_count() == 2);
  CHECK(n1.units.size() == 2);
  CHECK(n1.arrows.arrow_count() == 3);
  CHECK(theta(n1) == one);

  const auto ab = fair_nerve(delta_discrete({"a", "b"}));
  CHECK(ab.units.size() == 2);
  CHECK(ab.arrows.arrow_count() == 2);

  const auto g = theta(fair_nerve(build::cyclic_group(2)));
  CHECK(g.object_count() == 1);
  for (std::size_t a = 0; a < g.arrow_count(); ++a) CHECK(g.inverse(a).has_value());

  CHECK_THROWS_AS(theta(gen::left_zero_semigroup(2)), std::invalid_argument);
  CHECK_THROWS_AS(fair_nerve(build::left_zero(2)), std::invalid_argument);
}

TEST_CASE("round trips through theta and fair_nerve") {
  gen::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto c = gen::random_category(rng);
    const auto back = theta(fair_nerve(c));
    oracle::Seq objs(c.object_count()), arrs(c.arrow_count());
    std::iota(objs.begin(), objs.end(), 0);
    std::iota(arrs.begin(), arrs.end(), 0);
    CHECK(oracle::is_iso(c, back, objs, arrs));

    const auto x = gen::random_fair_set(rng);
    REQUIRE(validate_fair_set(x).ok());
    const auto y = fair_nerve(theta(x));
    const auto m = fair_unit_comparison(x);
    CHECK(is_fair_isomorphism(x, y, m));
    for (std::size_t w = 0; w < x.units.size(); ++w) CHECK(y.units[m.units[w]].arrow == m.arrows[x.units[w].arrow]);
  }
}

TEST_CASE("validator-accepted candidates have endo and strict units") {
  gen::Rng rng(32);
  std::size_t accepted = 0;
  for (int t = 0; t < 200; ++t) {
    const auto x = gen::random_fair_set_candidate(rng);
    const auto v = validate_fair_set(x);
    if (!v.ok()) continue;
    ++accepted;
    const FinCategory& c = x.arrows;
    for (const auto& w : x.units) {
      CHECK(c.src(w.arrow) == w.object);
      CHECK(c.tgt(w.arrow) == w.object);
      for (std::size_t a = 0; a < c.arrow_count(); ++a) {
        if (c.tgt(a) == w.object) CHECK(c.compose(a, w.arrow) == a);
        if (c.src(a) == w.object) CHECK(c.compose(w.arrow, a) == a);
      }
    }
  }
  CHECK(accepted > 10);
}

TEST_CASE("evaluate_object examples") {
  const auto n1 = fair_nerve(ordinal_category(1));
  CHECK(evaluate_object(n1, co("o-o")).size() == 2);
  CHECK(evaluate_object(n1, co("o")).size() == 2);
  CHECK(evaluate_object(n1, co("o.o")).size() == 3);

  const auto g1 = evaluate_map(n1, generator_map(Generator::g1));
  CHECK(g1.is_bijective());
  for (std::size_t i = 0; i < g1.domain.size(); ++i) {
    const std::size_t u = g1.domain[i][0];
    CHECK(g1.codomain[g1.table[i]] == FairSimplex{n1.arrows.src(u)});
  }
}

TEST_CASE("evaluation matches the string oracle and is functorial") {
  gen::Rng rng(33);
  const auto objs = objects_up_to(3);
  for (int t = 0; t < 8; ++t) {
    const auto x = gen::random_fair_set(rng, 3, 8);
    for (const auto& k : objs) CHECK(evaluate_object(x, k) == strings_over(x, k));
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& f : enum_hom_fat(a, b)) {
          const auto m = evaluate_map(x, f);
          for (std::size_t i = 0; i < m.domain.size(); ++i)
            CHECK(m.codomain[m.table[i]] == restrict_oracle(x, f, m.domain[i]));
          if (is_vertical(f)) CHECK(m.is_bijective());
          for (const auto& c : objs)
            for (const auto& g : enum_hom_fat(b, c))
              for (const auto& s : evaluate_object(x, c))
                CHECK(restrict_along(x, compose_fat(f, g), s) == restrict_along(x, f, restrict_along(x, g, s)));
        }
  }
}

TEST_CASE("vertical maps evaluate to bijections up to five dots") {
  gen::Rng rng(34);
  const auto x = gen::random_fair_set(rng, 3, 6);
  const auto objs = objects_up_to(5);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : enum_hom_fat(a, b))
        if (is_vertical(f)) CHECK(evaluate_map(x, f).is_bijective());
}

TEST_CASE("the Segal map is bijective") {
  gen::Rng rng(35);
  const auto objs = objects_up_to(3);
  for (int t = 0; t < 5; ++t) {
    const auto x = gen::random_fair_set(rng, 3, 8);
    for (const auto& k : objs)
      for (const auto& l : objs) CHECK(segal_map_is_bijective(x, k, l));
  }
}

TEST_CASE("underlying_nerve_check") {
  const auto t = underlying_nerve_check(fair_nerve(terminal_category()), 3);
  CHECK(t.ok);
  CHECK(t.level_sizes == oracle::Seq{1, 1, 1, 1});

  const auto n1 = underlying_nerve_check(fair_nerve(ordinal_category(1)), 2);
  CHECK(n1.ok);
  CHECK(n1.level_sizes == oracle::Seq{2, 3, 4});

  const auto z2 = underlying_nerve_check(fair_nerve(build::cyclic_group(2)), 2);
  CHECK(z2.ok);
  CHECK(z2.level_sizes == oracle::Seq{1, 2, 4});

  gen::Rng rng(36);
  for (int i = 0; i < 10; ++i) CHECK(underlying_nerve_check(gen::random_fair_set(rng, 3, 8), 2).ok);
}
