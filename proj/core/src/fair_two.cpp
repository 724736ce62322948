#include "fatdelta/fair_two.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatdelta {

namespace {

// U(x) with its tensor as a one-object semi-2-category, so the tensor laws
// come from validate_semi_two.
SemiTwoCategory unit_as_semi_two(const UnitPart& u) {
  SemiTwoCategory s({"*"});
  s.set_hom(0, 0, u.category);
  s.table(0, 0, 0) = u.tensor;
  return s;
}

void check_equivalence(Verdict& v, const FinFunctor& f, const std::string& name) {
  const EquimorphismReport r = equimorphism_report(f);
  if (!r.fully_faithful) v.add(name + " is not fully faithful");
  if (!r.essentially_surjective) v.add(name + " is not essentially surjective");
}

bool bijective_on(const std::vector<std::size_t>& from, std::vector<std::size_t> images,
                  std::vector<std::size_t> to) {
  if (from.size() != to.size()) return false;
  std::sort(images.begin(), images.end());
  std::sort(to.begin(), to.end());
  return images == to;
}

}  // namespace

FinFunctor unit_action_functor(const FairTwoCategory& x, std::size_t object, std::size_t other, bool left) {
  const SemiTwoCategory& s = x.arrows;
  const UnitPart& u = x.units.at(object);
  if (left)
    return functor_from_product(
        u.category, s.hom(object, other), s.hom(object, other),
        [&](std::size_t w, std::size_t a) { return s.tensor(object, object, other, u.embed_objects[w], a); },
        [&](std::size_t g, std::size_t b) { return s.tensor2(object, object, other, u.embed_arrows[g], b); });
  return functor_from_product(
      s.hom(other, object), u.category, s.hom(other, object),
      [&](std::size_t a, std::size_t w) { return s.tensor(other, object, object, a, u.embed_objects[w]); },
      [&](std::size_t b, std::size_t g) { return s.tensor2(other, object, object, b, u.embed_arrows[g]); });
}

FairTwoVerdict validate_fair_two(const FairTwoCategory& x) {
  FairTwoVerdict out;
  Verdict& v = out.verdict;
  const SemiTwoCategory& s = x.arrows;
  const std::size_t n = s.object_count();
  out.is_fair_monoidal = n == 1;

  v.merge(validate_semi_two(s));
  if (!v.ok()) return out;
  if (x.units.size() != n) {
    v.add("expected " + std::to_string(n) + " unit parts, found " + std::to_string(x.units.size()));
    return out;
  }

  for (std::size_t o = 0; o < n; ++o) {
    const std::string& name = s.objects()[o];
    const std::string where = "U(" + name + "): ";
    const UnitPart& u = x.units[o];
    const FinCategory& uc = u.category;

    Verdict local = validate_semi_two(unit_as_semi_two(u));
    v.merge(local, where);
    if (!local.ok()) continue;

    if (u.embed_objects.size() != uc.object_count() || u.embed_arrows.size() != uc.arrow_count()) {
      v.add(where + "embedding has the wrong size");
      continue;
    }
    const Verdict fv = validate(unit_embedding(x, o));
    v.merge(fv, where + "embedding: ");
    if (!fv.ok()) continue;

    for (std::size_t a = 0; a < uc.object_count(); ++a)
      for (std::size_t b = 0; b < uc.object_count(); ++b)
        if (u.embed_objects[u.unit_tensor(a, b)] != s.tensor(o, o, o, u.embed_objects[a], u.embed_objects[b]))
          v.add(where + "embedding does not commute with the tensor at (" + uc.object_id(a) + ", " +
                uc.object_id(b) + ")");
    for (std::size_t a = 0; a < uc.arrow_count(); ++a)
      for (std::size_t b = 0; b < uc.arrow_count(); ++b)
        if (u.embed_arrows[u.unit_tensor2(a, b)] != s.tensor2(o, o, o, u.embed_arrows[a], u.embed_arrows[b]))
          v.add(where + "embedding does not commute with the tensor at (" + uc.arrow_id(a) + ", " +
                uc.arrow_id(b) + ")");

    if (!is_contractible(uc)) v.add(where + "not contractible");

    // U(x) -> {x} is the same functor for both endpoint maps.
    FinFunctor to_point{uc, terminal_category(), std::vector<std::size_t>(uc.object_count(), 0),
                        std::vector<std::size_t>(uc.arrow_count(), 0)};
    check_equivalence(v, to_point, where + "U(" + name + ") -> {" + name + "}");
    for (std::size_t y = 0; y < n; ++y) {
      const std::string& other = s.objects()[y];
      check_equivalence(v, unit_action_functor(x, o, y, true),
                        "U(" + name + ") x A(" + name + "," + other + ") -> A(" + name + "," + other + ")");
      check_equivalence(v, unit_action_functor(x, o, y, false),
                        "A(" + other + "," + name + ") x U(" + name + ") -> A(" + other + "," + name + ")");
    }
    check_equivalence(v,
                      functor_from_product(
                          uc, uc, uc, [&](std::size_t a, std::size_t b) { return u.unit_tensor(a, b); },
                          [&](std::size_t a, std::size_t b) { return u.unit_tensor2(a, b); }),
                      "U(" + name + ") x U(" + name + ") -> U(" + name + ")");
  }
  return out;
}

FinCategory slice(const FairTwoCategory& x, SliceKind kind, const std::string& from, const std::string& to) {
  const std::size_t a = x.arrows.object_index(from);
  if (kind == SliceKind::unit) return x.units.at(a).category;
  return x.arrows.hom(a, x.arrows.object_index(to));
}

FinFunctor unit_embedding(const FairTwoCategory& x, std::size_t object) {
  const UnitPart& u = x.units.at(object);
  return FinFunctor{u.category, x.arrows.hom(object, object), u.embed_objects, u.embed_arrows};
}

Verdict check_unit_translations(const FairTwoCategory& x) {
  Verdict v;
  const SemiTwoCategory& s = x.arrows;
  const std::size_t n = s.object_count();
  for (std::size_t o = 0; o < n; ++o) {
    const UnitPart& u = x.units.at(o);
    for (std::size_t w = 0; w < u.category.object_count(); ++w) {
      const std::size_t e = u.embed_objects[w];
      const std::size_t id_e = s.id2(o, o, e);
      const std::string unit = u.category.object_id(w);
      for (std::size_t y = 0; y < n; ++y) {
        const FinCategory& right = s.hom(o, y);
        for (std::size_t a = 0; a < right.object_count(); ++a)
          for (std::size_t b = 0; b < right.object_count(); ++b) {
            const auto from = right.hom(a, b);
            std::vector<std::size_t> images;
            for (std::size_t beta : from) images.push_back(s.tensor2(o, o, y, id_e, beta));
            const FinCategory& out = s.hom(o, y);
            if (!bijective_on(from, images, out.hom(s.tensor(o, o, y, e, a), s.tensor(o, o, y, e, b))))
              v.add(unit + " (x) - is not bijective on Hom(" + right.object_id(a) + ", " + right.object_id(b) + ")");
          }
        const FinCategory& left = s.hom(y, o);
        for (std::size_t a = 0; a < left.object_count(); ++a)
          for (std::size_t b = 0; b < left.object_count(); ++b) {
            const auto from = left.hom(a, b);
            std::vector<std::size_t> images;
            for (std::size_t beta : from) images.push_back(s.tensor2(y, o, o, beta, id_e));
            if (!bijective_on(from, images, left.hom(s.tensor(y, o, o, a, e), s.tensor(y, o, o, b, e))))
              v.add("- (x) " + unit + " is not bijective on Hom(" + left.object_id(a) + ", " + left.object_id(b) + ")");
          }
      }
    }
  }
  return v;
}

FairTwoCategory fair_two_from_strict(const SemiTwoCategory& s, const std::vector<std::size_t>& identities) {
  if (identities.size() != s.object_count()) throw std::invalid_argument("one identity 1-cell per object required");
  FairTwoCategory x{s, {}};
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    const FinCategory& hom = s.hom(o, o);
    const std::size_t i = identities[o];
    if (i >= hom.object_count()) throw std::invalid_argument("identity 1-cell out of range");
    UnitPart u;
    u.category.add_object(hom.object_id(i));
    u.category.add_arrow(hom.arrow_id(hom.identity(i)), 0, 0);
    u.category.set_identity(0, 0);
    u.category.set_compose(0, 0, 0);
    u.tensor = TensorTable{{0}, {0}};
    u.embed_objects = {i};
    u.embed_arrows = {hom.identity(i)};
    x.units.push_back(std::move(u));
  }
  return x;
}

}  // namespace fatdelta
