#include "fatdelta/fair_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fatdelta {

std::size_t FairSetCategory::unit_at(std::size_t x) const {
  for (std::size_t w = 0; w < units.size(); ++w)
    if (units[w].object == x) return w;
  return npos;
}

namespace {

// Checks that a -> unit (x) a (left) or a -> a (x) unit (right) permutes the
// hom fibre it acts on.
bool translation_bijective(const FinCategory& c, std::size_t unit_arrow, const std::vector<std::size_t>& fibre,
                           bool left) {
  std::vector<std::size_t> images;
  for (std::size_t a : fibre) {
    const std::size_t r = left ? c.compose(unit_arrow, a) : c.compose(a, unit_arrow);
    if (r == npos) return false;
    images.push_back(r);
  }
  std::sort(images.begin(), images.end());
  return images == fibre;  // fibre is sorted; images must be a permutation of it
}

}  // namespace

FairSetVerdict validate_fair_set(const FairSetCategory& x) {
  FairSetVerdict out;
  Verdict& v = out.verdict;
  const FinCategory& c = x.arrows;
  v.merge(validate_semi(c), "semi-category: ");

  bool units_in_range = true;
  for (const auto& w : x.units) {
    if (w.object >= c.object_count() || w.arrow >= c.arrow_count()) {
      v.add("unit `" + w.id + "` refers to an unknown object or arrow");
      units_in_range = false;
    }
  }
  out.is_fair_monoid = c.object_count() == 1;
  if (!units_in_range) return out;

  for (const auto& w : x.units) {
    if (c.src(w.arrow) != w.object) v.add("source of u(" + w.id + ") is not its base object");
    if (c.tgt(w.arrow) != w.object) v.add("target of u(" + w.id + ") is not its base object");
  }
  std::vector<std::size_t> per_object(c.object_count(), 0);
  for (const auto& w : x.units) ++per_object[w.object];
  for (std::size_t o = 0; o < c.object_count(); ++o)
    if (per_object[o] != 1)
      v.add("base map U -> O is not bijective at `" + c.object_id(o) + "` (" + std::to_string(per_object[o]) +
            " units)");
  std::vector<std::size_t> carriers;
  for (const auto& w : x.units) carriers.push_back(w.arrow);
  std::sort(carriers.begin(), carriers.end());
  if (std::adjacent_find(carriers.begin(), carriers.end()) != carriers.end()) v.add("u : U -> A is not injective");

  out.units_are_endo = std::all_of(x.units.begin(), x.units.end(),
                                   [&](const FairUnit& w) { return c.src(w.arrow) == c.tgt(w.arrow); });
  if (!v.ok()) return out;

  // U is a semi-category over O with one element per object, so its
  // composition is forced; u must respect it.
  for (const auto& w : x.units)
    if (c.compose(w.arrow, w.arrow) != w.arrow) v.add("u(" + w.id + ") (x) u(" + w.id + ") != u(" + w.id + ")");

  // Colour axiom in Set: composing with a weak identity is a bijection on
  // each hom fibre.
  for (const auto& w : x.units) {
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      if (!translation_bijective(c, w.arrow, c.hom(w.object, y), true))
        v.add("left translation by u(" + w.id + ") on A(" + c.object_id(w.object) + "," + c.object_id(y) +
              ") is not bijective");
      if (!translation_bijective(c, w.arrow, c.hom(y, w.object), false))
        v.add("right translation by u(" + w.id + ") on A(" + c.object_id(y) + "," + c.object_id(w.object) +
              ") is not bijective");
    }
  }
  if (!v.ok()) return out;

  // An idempotent bijection is the identity, so the weak identities are strict.
  out.units_strict = true;
  for (const auto& w : x.units)
    for (std::size_t a = 0; a < c.arrow_count(); ++a) {
      if (c.src(a) == w.object && c.compose(w.arrow, a) != a) out.units_strict = false;
      if (c.tgt(a) == w.object && c.compose(a, w.arrow) != a) out.units_strict = false;
    }
  if (!out.units_strict) v.add("internal: weak identities passed the axioms but are not strict identities");
  if (!out.units_are_endo) v.add("internal: weak identities passed the axioms but are not endomorphisms");
  return out;
}

FinCategory theta(const FairSetCategory& x) {
  if (auto r = validate_fair_set(x); !r.ok()) throw std::invalid_argument("theta: " + r.verdict.violations.front());
  FinCategory c = x.arrows;
  for (const auto& w : x.units) c.set_identity(w.object, w.arrow);
  return c;
}

FairSetCategory fair_nerve(const FinCategory& c) {
  if (auto v = validate(c); !v.ok()) throw std::invalid_argument("fair_nerve: " + v.violations.front());
  FairSetCategory x{c, {}};
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    x.units.push_back({c.arrow_id(c.identity(o)), o, c.identity(o)});
    x.arrows.set_identity(o, npos);
  }
  return x;
}

bool is_fair_isomorphism(const FairSetCategory& a, const FairSetCategory& b, const FairSetMorphism& m) {
  const FinCategory& ca = a.arrows;
  const FinCategory& cb = b.arrows;
  if (m.objects.size() != ca.object_count() || m.arrows.size() != ca.arrow_count() || m.units.size() != a.units.size())
    return false;
  if (ca.object_count() != cb.object_count() || ca.arrow_count() != cb.arrow_count() || a.units.size() != b.units.size())
    return false;
  auto bijective = [](const std::vector<std::size_t>& f, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (std::size_t i : f) {
      if (i >= n || hit[i]) return false;
      hit[i] = true;
    }
    return true;
  };
  if (!bijective(m.objects, cb.object_count()) || !bijective(m.arrows, cb.arrow_count()) ||
      !bijective(m.units, b.units.size()))
    return false;
  for (std::size_t f = 0; f < ca.arrow_count(); ++f) {
    if (cb.src(m.arrows[f]) != m.objects[ca.src(f)] || cb.tgt(m.arrows[f]) != m.objects[ca.tgt(f)]) return false;
    for (std::size_t g = 0; g < ca.arrow_count(); ++g) {
      const std::size_t fg = ca.compose(f, g);
      if (fg == npos) continue;
      if (cb.compose(m.arrows[f], m.arrows[g]) != m.arrows[fg]) return false;
    }
  }
  for (std::size_t w = 0; w < a.units.size(); ++w) {
    const FairUnit& target = b.units[m.units[w]];
    if (target.object != m.objects[a.units[w].object] || target.arrow != m.arrows[a.units[w].arrow]) return false;
  }
  return true;
}

FairSetMorphism fair_unit_comparison(const FairSetCategory& x) {
  FairSetMorphism m;
  for (std::size_t o = 0; o < x.object_count(); ++o) m.objects.push_back(o);
  for (std::size_t a = 0; a < x.arrows.arrow_count(); ++a) m.arrows.push_back(a);
  // the nerve lists its units by object, so u(w) sits at index base(w)
  for (const auto& w : x.units) m.units.push_back(w.object);
  return m;
}

// ---------------------------------------------------------------------------
// Evaluation at coloured ordinals

namespace {

std::vector<bool> unit_carriers(const FairSetCategory& x) {
  std::vector<bool> is_unit(x.arrows.arrow_count(), false);
  for (const auto& w : x.units) is_unit[w.arrow] = true;
  return is_unit;
}

// Vertex j of a string over an object with `dots` dots.
std::size_t vertex(const FinCategory& c, const FairSimplex& s, std::size_t dots, std::size_t j) {
  if (dots == 1) return s[0];
  if (j + 1 < dots) return c.src(s[j]);
  return c.tgt(s.back());
}

void require_valid(const FairSetCategory& x, const char* what) {
  if (auto r = validate_fair_set(x); !r.ok())
    throw std::invalid_argument(std::string(what) + ": " + r.verdict.violations.front());
}

}  // namespace

std::vector<FairSimplex> evaluate_object(const FairSetCategory& x, const ColouredOrdinal& k) {
  const FinCategory& c = x.arrows;
  std::vector<FairSimplex> out;
  if (k.dots() == 1) {
    for (std::size_t o = 0; o < c.object_count(); ++o) out.push_back({o});
    return out;
  }
  const auto is_unit = unit_carriers(x);
  FairSimplex chain;
  auto rec = [&](auto&& self) -> void {
    const std::size_t i = chain.size();
    if (i + 1 == k.dots()) {
      out.push_back(chain);
      return;
    }
    for (std::size_t a = 0; a < c.arrow_count(); ++a) {
      if (i > 0 && c.src(a) != c.tgt(chain.back())) continue;
      if (k.linked(i) && !is_unit[a]) continue;
      chain.push_back(a);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

FairSimplex restrict_along(const FairSetCategory& x, const FatMap& phi, const FairSimplex& s) {
  const FinCategory& c = x.arrows;
  const std::size_t dots = phi.dst().dots();
  if (phi.src().dots() == 1) return {vertex(c, s, dots, phi(0))};
  FairSimplex out;
  for (std::size_t i = 0; i + 1 < phi.src().dots(); ++i) {
    std::size_t acc = s[phi(i)];
    for (std::size_t j = phi(i) + 1; j < phi(i + 1); ++j) acc = c.then(acc, s[j]);
    out.push_back(acc);
  }
  return out;
}

bool EvaluatedMap::is_bijective() const {
  if (domain.size() != codomain.size()) return false;
  std::vector<bool> hit(codomain.size(), false);
  for (std::size_t i : table) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

EvaluatedMap evaluate_map(const FairSetCategory& x, const FatMap& phi) {
  require_valid(x, "evaluate_map");
  EvaluatedMap m{evaluate_object(x, phi.dst()), evaluate_object(x, phi.src()), {}};
  for (const auto& s : m.domain) {
    const FairSimplex r = restrict_along(x, phi, s);
    auto it = std::lower_bound(m.codomain.begin(), m.codomain.end(), r);
    if (it == m.codomain.end() || *it != r)
      throw std::logic_error("evaluate_map: restriction left X(K) (internal invariant)");
    m.table.push_back(static_cast<std::size_t>(it - m.codomain.begin()));
  }
  return m;
}

bool segal_map_is_bijective(const FairSetCategory& x, const ColouredOrdinal& k, const ColouredOrdinal& l) {
  require_valid(x, "segal_map_is_bijective");
  const FinCategory& c = x.arrows;
  const ColouredOrdinal sum = dotsum(k, l);
  std::vector<std::size_t> left(k.dots()), right(l.dots());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
  for (std::size_t i = 0; i < right.size(); ++i) right[i] = k.dots() - 1 + i;
  const FatMap inl(k, sum, left), inr(l, sum, right);

  const auto xk = evaluate_object(x, k);
  const auto xl = evaluate_object(x, l);
  std::size_t fibre_product_size = 0;
  for (const auto& a : xk)
    for (const auto& b : xl)
      if (vertex(c, a, k.dots(), k.dots() - 1) == vertex(c, b, l.dots(), 0)) ++fibre_product_size;

  std::vector<std::pair<FairSimplex, FairSimplex>> images;
  for (const auto& s : evaluate_object(x, sum)) images.emplace_back(restrict_along(x, inl, s), restrict_along(x, inr, s));
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  return injective && images.size() == fibre_product_size;
}

NerveCheck underlying_nerve_check(const FairSetCategory& x, std::size_t levels) {
  require_valid(x, "underlying_nerve_check");
  const FinCategory c = theta(x);
  NerveCheck out;
  std::vector<std::vector<std::vector<std::size_t>>> nerve;
  for (std::size_t k = 0; k <= levels; ++k) {
    nerve.push_back(nerve_level(c, k));
    out.level_sizes.push_back(nerve.back().size());
  }
  for (std::size_t dots = 1; dots <= levels + 1; ++dots) {
    for (const ColouredOrdinal& k : all_coloured_ordinals(dots)) {
      const std::size_t level = k.components() - 1;
      // vertical map from the unlinked object picking the bottom dot of each component
      std::vector<std::size_t> images;
      for (std::size_t d = 0; d < k.dots(); ++d)
        if (d == 0 || !k.linked(d - 1)) images.push_back(d);
      const FatMap comparison(ColouredOrdinal(level + 1), k, images);
      const EvaluatedMap m = evaluate_map(x, comparison);
      if (m.codomain != nerve[level]) {
        out.ok = false;
        out.failures.push_back(k.to_string() + ": unlinked value differs from nerve level " + std::to_string(level));
      } else if (!m.is_bijective()) {
        out.ok = false;
        out.failures.push_back(k.to_string() + ": comparison with nerve level " + std::to_string(level) +
                               " is not bijective");
      }
    }
  }
  return out;
}

}  // namespace fatdelta
