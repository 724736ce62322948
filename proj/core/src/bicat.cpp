#include "fatdelta/bicat.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatdelta {

namespace {

bool lambda_natural(const SemiTwoCategory& s, std::size_t o, std::size_t z, std::size_t unit,
                    const std::vector<std::size_t>& lambda, std::size_t beta) {
  const FinCategory& h = s.hom(o, z);
  const std::size_t y = h.src(beta), y2 = h.tgt(beta);
  return h.compose(s.whisker_left(o, o, z, unit, beta), lambda[y2]) == h.compose(lambda[y], beta);
}

bool rho_natural(const SemiTwoCategory& s, std::size_t w, std::size_t o, std::size_t unit,
                 const std::vector<std::size_t>& rho, std::size_t beta) {
  const FinCategory& h = s.hom(w, o);
  const std::size_t x = h.src(beta), x2 = h.tgt(beta);
  return h.compose(s.whisker_right(w, o, o, beta, unit), rho[x2]) == h.compose(rho[x], beta);
}

// rho_X (x) Y == X (x) lambda_Y for the given X in Hom(w,o), Y in Hom(o,z).
bool kelly_holds(const SemiTwoCategory& s, std::size_t w, std::size_t o, std::size_t z, std::size_t x,
                 std::size_t y, std::size_t rho_x, std::size_t lambda_y) {
  return s.tensor2(w, o, z, rho_x, s.id2(o, z, y)) == s.tensor2(w, o, z, s.id2(w, o, x), lambda_y);
}

// Invertible 2-cells from -> to in h.
std::vector<std::size_t> invertible_cells(const FinCategory& h, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t a : h.hom(from, to))
    if (h.inverse(a)) out.push_back(a);
  return out;
}

// Enumerates all identity triples at o with the given unit.
class TripleSearch {
 public:
  TripleSearch(const SemiTwoCategory& s, std::size_t o, std::size_t unit) : s_(s), o_(o), unit_(unit) {
    const std::size_t n = s.object_count();
    current_.object = o;
    current_.unit = unit;
    current_.left.resize(n);
    current_.right.resize(n);
    for (std::size_t z = 0; z < n; ++z) {
      const FinCategory& h = s.hom(o, z);
      current_.left[z].assign(h.object_count(), npos);
      for (std::size_t y = 0; y < h.object_count(); ++y)
        slots_.push_back({true, z, y, invertible_cells(h, s.tensor(o, o, z, unit, y), y)});
    }
    for (std::size_t w = 0; w < n; ++w) {
      const FinCategory& h = s.hom(w, o);
      current_.right[w].assign(h.object_count(), npos);
      for (std::size_t x = 0; x < h.object_count(); ++x)
        slots_.push_back({false, w, x, invertible_cells(h, s.tensor(w, o, o, x, unit), x)});
    }
  }

  std::vector<IdentityTriple> run() {
    search(0);
    return std::move(found_);
  }

 private:
  struct Slot {
    bool left;
    std::size_t other;  // z for lambda, w for rho
    std::size_t cell;   // Y or X
    std::vector<std::size_t> candidates;
  };

  void search(std::size_t k) {
    if (k == slots_.size()) {
      found_.push_back(current_);
      return;
    }
    const Slot& slot = slots_[k];
    auto& family = slot.left ? current_.left[slot.other] : current_.right[slot.other];
    for (std::size_t c : slot.candidates) {
      family[slot.cell] = c;
      if (consistent(slot)) search(k + 1);
    }
    family[slot.cell] = npos;
  }

  // Checks constraints between the new slot and slots assigned before it.
  bool consistent(const Slot& slot) const {
    if (slot.left) {
      const FinCategory& h = s_.hom(o_, slot.other);
      const auto& lambda = current_.left[slot.other];
      for (std::size_t b = 0; b < h.arrow_count(); ++b) {
        const std::size_t y = h.src(b), y2 = h.tgt(b);
        if ((y != slot.cell && y2 != slot.cell) || y > slot.cell || y2 > slot.cell) continue;
        if (!lambda_natural(s_, o_, slot.other, unit_, lambda, b)) return false;
      }
      return true;
    }
    const FinCategory& h = s_.hom(slot.other, o_);
    const auto& rho = current_.right[slot.other];
    for (std::size_t b = 0; b < h.arrow_count(); ++b) {
      const std::size_t x = h.src(b), x2 = h.tgt(b);
      if ((x != slot.cell && x2 != slot.cell) || x > slot.cell || x2 > slot.cell) continue;
      if (!rho_natural(s_, slot.other, o_, unit_, rho, b)) return false;
    }
    // every lambda slot precedes every rho slot
    for (std::size_t z = 0; z < s_.object_count(); ++z)
      for (std::size_t y = 0; y < s_.hom(o_, z).object_count(); ++y)
        if (!kelly_holds(s_, slot.other, o_, z, slot.cell, y, rho[slot.cell], current_.left[z][y])) return false;
    return true;
  }

  const SemiTwoCategory& s_;
  std::size_t o_;
  std::size_t unit_;
  std::vector<Slot> slots_;
  IdentityTriple current_;
  std::vector<IdentityTriple> found_;
};

std::string triple_label(const SemiTwoCategory& s, const IdentityTriple& t, std::size_t k) {
  return s.hom(t.object, t.object).object_id(t.unit) + "#" + std::to_string(k);
}

}  // namespace

Verdict validate_identity_triple(const SemiTwoCategory& s, const IdentityTriple& t) {
  Verdict v;
  const std::size_t n = s.object_count();
  const std::size_t o = t.object;
  if (o >= n) {
    v.add("triple object out of range");
    return v;
  }
  const std::string& on = s.objects()[o];
  if (t.unit >= s.hom(o, o).object_count()) {
    v.add("unit 1-cell out of range at " + on);
    return v;
  }
  if (t.left.size() != n || t.right.size() != n) {
    v.add("constraint families at " + on + " have the wrong shape");
    return v;
  }
  bool shaped = true;
  for (std::size_t z = 0; z < n; ++z) {
    const FinCategory& h = s.hom(o, z);
    if (t.left[z].size() != h.object_count()) {
      v.add("lambda at " + on + " has the wrong number of components into " + s.objects()[z]);
      shaped = false;
      continue;
    }
    for (std::size_t y = 0; y < h.object_count(); ++y) {
      const std::size_t c = t.left[z][y];
      if (c >= h.arrow_count() || h.src(c) != s.tensor(o, o, z, t.unit, y) || h.tgt(c) != y) {
        v.add("lambda_" + h.object_id(y) + " at " + on + " has the wrong endpoints");
        shaped = false;
      } else if (!h.inverse(c)) {
        v.add("lambda_" + h.object_id(y) + " at " + on + " is not invertible");
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    const FinCategory& h = s.hom(w, o);
    if (t.right[w].size() != h.object_count()) {
      v.add("rho at " + on + " has the wrong number of components from " + s.objects()[w]);
      shaped = false;
      continue;
    }
    for (std::size_t x = 0; x < h.object_count(); ++x) {
      const std::size_t c = t.right[w][x];
      if (c >= h.arrow_count() || h.src(c) != s.tensor(w, o, o, x, t.unit) || h.tgt(c) != x) {
        v.add("rho_" + h.object_id(x) + " at " + on + " has the wrong endpoints");
        shaped = false;
      } else if (!h.inverse(c)) {
        v.add("rho_" + h.object_id(x) + " at " + on + " is not invertible");
      }
    }
  }
  if (!shaped) return v;

  for (std::size_t z = 0; z < n; ++z) {
    const FinCategory& h = s.hom(o, z);
    for (std::size_t b = 0; b < h.arrow_count(); ++b)
      if (!lambda_natural(s, o, z, t.unit, t.left[z], b))
        v.add("lambda at " + on + " is not natural at " + h.arrow_id(b));
  }
  for (std::size_t w = 0; w < n; ++w) {
    const FinCategory& h = s.hom(w, o);
    for (std::size_t b = 0; b < h.arrow_count(); ++b)
      if (!rho_natural(s, w, o, t.unit, t.right[w], b)) v.add("rho at " + on + " is not natural at " + h.arrow_id(b));
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t x = 0; x < s.hom(w, o).object_count(); ++x)
        for (std::size_t y = 0; y < s.hom(o, z).object_count(); ++y)
          if (!kelly_holds(s, w, o, z, x, y, t.right[w][x], t.left[z][y]))
            v.add("Kelly condition fails at " + on + " for (" + s.hom(w, o).object_id(x) + ", " +
                  s.hom(o, z).object_id(y) + ")");
  return v;
}

Verdict validate_bicategory(const StrictCompBicategory& c) {
  Verdict v = validate_semi_two(c.cells);
  if (!v.ok()) return v;
  if (c.units.size() != c.cells.object_count()) {
    v.add("expected one chosen identity triple per object");
    return v;
  }
  for (std::size_t o = 0; o < c.units.size(); ++o) {
    if (c.units[o].object != o) v.add("triple " + std::to_string(o) + " is attached to the wrong object");
    v.merge(validate_identity_triple(c.cells, c.units[o]));
  }
  return v;
}

IdentityTriple strict_triple(const SemiTwoCategory& s, std::size_t object, std::size_t unit) {
  const std::size_t n = s.object_count();
  IdentityTriple t{object, unit, std::vector<std::vector<std::size_t>>(n), std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < s.hom(object, z).object_count(); ++y) t.left[z].push_back(s.id2(object, z, y));
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < s.hom(w, object).object_count(); ++x) t.right[w].push_back(s.id2(w, object, x));
  return t;
}

bool is_triple_morphism(const SemiTwoCategory& s, std::size_t theta, const IdentityTriple& from,
                        const IdentityTriple& to) {
  const std::size_t o = from.object;
  if (to.object != o) return false;
  const FinCategory& hoo = s.hom(o, o);
  if (theta >= hoo.arrow_count() || hoo.src(theta) != from.unit || hoo.tgt(theta) != to.unit) return false;
  for (std::size_t z = 0; z < s.object_count(); ++z) {
    const FinCategory& h = s.hom(o, z);
    for (std::size_t y = 0; y < h.object_count(); ++y)
      if (h.compose(s.whisker_right(o, o, z, theta, y), to.left[z][y]) != from.left[z][y]) return false;
  }
  for (std::size_t w = 0; w < s.object_count(); ++w) {
    const FinCategory& h = s.hom(w, o);
    for (std::size_t x = 0; x < h.object_count(); ++x)
      if (h.compose(s.whisker_left(w, o, o, x, theta), to.right[w][x]) != from.right[w][x]) return false;
  }
  return true;
}

IdentityCategory identity_category(const StrictCompBicategory& c, std::size_t object) {
  if (const Verdict v = validate_bicategory(c); !v.ok())
    throw std::invalid_argument("identity_category: invalid bicategory: " + v.violations.front());
  const SemiTwoCategory& s = c.cells;
  const FinCategory& hoo = s.hom(object, object);
  IdentityCategory out;
  for (std::size_t i = 0; i < hoo.object_count(); ++i) {
    auto found = TripleSearch(s, object, i).run();
    for (std::size_t k = 0; k < found.size(); ++k) {
      out.category.add_object(triple_label(s, found[k], k));
      out.triples.push_back(std::move(found[k]));
    }
  }
  const std::size_t m = out.triples.size();
  std::vector<std::vector<std::size_t>> arrow_of(m * m);  // (a, b) -> arrows a -> b
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t theta : hoo.hom(out.triples[a].unit, out.triples[b].unit))
        if (is_triple_morphism(s, theta, out.triples[a], out.triples[b])) {
          const std::size_t id = out.category.add_arrow(
              hoo.arrow_id(theta) + "@" + out.category.object_id(a) + "," + out.category.object_id(b), a, b);
          out.arrow_cells.push_back(theta);
          arrow_of[a * m + b].push_back(id);
          if (a == b && theta == hoo.identity(out.triples[a].unit)) out.category.set_identity(a, id);
        }
  for (std::size_t f = 0; f < out.arrow_cells.size(); ++f)
    for (std::size_t g = 0; g < out.arrow_cells.size(); ++g) {
      if (out.category.tgt(f) != out.category.src(g)) continue;
      const std::size_t cell = hoo.compose(out.arrow_cells[f], out.arrow_cells[g]);
      for (std::size_t h : arrow_of[out.category.src(f) * m + out.category.tgt(g)])
        if (out.arrow_cells[h] == cell) out.category.set_compose(f, g, h);
    }
  out.contractible = is_contractible(out.category);
  return out;
}

std::size_t canonical_unit_iso(const SemiTwoCategory& s, const IdentityTriple& t1, const IdentityTriple& t2) {
  if (t1.object != t2.object) throw std::invalid_argument("canonical_unit_iso: triples at different objects");
  const std::size_t o = t1.object;
  const FinCategory& h = s.hom(o, o);
  const auto rho_inv = h.inverse(t1.right[o][t2.unit]);
  if (!rho_inv) throw std::logic_error("canonical_unit_iso: rho is not invertible");
  const std::size_t theta = h.then(*rho_inv, t2.left[o][t1.unit]);
  if (!is_triple_morphism(s, theta, t2, t1))
    throw std::logic_error("canonical_unit_iso: composite is not a morphism of identity triples");
  return theta;
}

IdentityTriple tensor_identity_triples(const SemiTwoCategory& s, const IdentityTriple& t1, const IdentityTriple& t2) {
  if (t1.object != t2.object) throw std::invalid_argument("tensor_identity_triples: triples at different objects");
  const std::size_t o = t1.object;
  const std::size_t n = s.object_count();
  IdentityTriple t{o, s.tensor(o, o, o, t1.unit, t2.unit), std::vector<std::vector<std::size_t>>(n),
                   std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t z = 0; z < n; ++z) {
    const FinCategory& h = s.hom(o, z);
    for (std::size_t y = 0; y < h.object_count(); ++y)
      t.left[z].push_back(h.then(s.whisker_left(o, o, z, t1.unit, t2.left[z][y]), t1.left[z][y]));
  }
  for (std::size_t w = 0; w < n; ++w) {
    const FinCategory& h = s.hom(w, o);
    for (std::size_t x = 0; x < h.object_count(); ++x)
      t.right[w].push_back(h.then(s.whisker_right(w, o, o, t1.right[w][x], t2.unit), t2.right[w][x]));
  }
  return t;
}

FairTwoCategory bicat_to_fair2(const StrictCompBicategory& c) {
  const SemiTwoCategory& s = c.cells;
  FairTwoCategory x{s, {}};
  for (std::size_t o = 0; o < s.object_count(); ++o) {
    IdentityCategory ic = identity_category(c, o);
    const FinCategory& u = ic.category;
    UnitPart part;
    for (std::size_t a = 0; a < u.object_count(); ++a)
      for (std::size_t b = 0; b < u.object_count(); ++b) {
        const IdentityTriple t = tensor_identity_triples(s, ic.triples[a], ic.triples[b]);
        auto it = std::find(ic.triples.begin(), ic.triples.end(), t);
        if (it == ic.triples.end()) throw std::logic_error("bicat_to_fair2: tensor of triples not found");
        part.tensor.cells.push_back(static_cast<std::size_t>(it - ic.triples.begin()));
      }
    for (std::size_t f = 0; f < u.arrow_count(); ++f)
      for (std::size_t g = 0; g < u.arrow_count(); ++g) {
        const std::size_t src = part.tensor.cells[u.src(f) * u.object_count() + u.src(g)];
        const std::size_t tgt = part.tensor.cells[u.tgt(f) * u.object_count() + u.tgt(g)];
        const std::size_t cell = s.tensor2(o, o, o, ic.arrow_cells[f], ic.arrow_cells[g]);
        std::size_t found = npos;
        for (std::size_t h : u.hom(src, tgt))
          if (ic.arrow_cells[h] == cell) found = h;
        if (found == npos) throw std::logic_error("bicat_to_fair2: tensor of triple morphisms not found");
        part.tensor.two_cells.push_back(found);
      }
    for (const auto& t : ic.triples) part.embed_objects.push_back(t.unit);
    part.embed_arrows = ic.arrow_cells;
    part.category = std::move(ic.category);
    x.units.push_back(std::move(part));
  }
  return x;
}

StrictCompBicategory fair2_to_bicat(const FairTwoCategory& x, UnitChoice choice) {
  if (const FairTwoVerdict v = validate_fair_two(x); !v.ok())
    throw std::invalid_argument("fair2_to_bicat: invalid fair 2-category: " + v.verdict.violations.front());
  const SemiTwoCategory& s = x.arrows;
  const std::size_t n = s.object_count();
  StrictCompBicategory c{s, {}};
  for (std::size_t o = 0; o < n; ++o) {
    const UnitPart& part = x.units[o];
    const FinCategory& u = part.category;
    const std::size_t w = choice == UnitChoice::first ? 0 : u.object_count() - 1;
    const std::size_t unit = part.embed_objects[w];
    const std::size_t alpha = part.embed_arrows[u.hom(part.unit_tensor(w, w), w).front()];

    IdentityTriple t{o, unit, std::vector<std::vector<std::size_t>>(n), std::vector<std::vector<std::size_t>>(n)};
    for (std::size_t z = 0; z < n; ++z) {
      const FinCategory& h = s.hom(o, z);
      for (std::size_t y = 0; y < h.object_count(); ++y) {
        const std::size_t target = s.whisker_right(o, o, z, alpha, y);
        std::size_t found = npos;
        for (std::size_t b : h.hom(s.tensor(o, o, z, unit, y), y))
          if (s.whisker_left(o, o, z, unit, b) == target) found = b;
        if (found == npos) throw std::logic_error("fair2_to_bicat: no left constraint at " + h.object_id(y));
        t.left[z].push_back(found);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      const FinCategory& h = s.hom(v, o);
      for (std::size_t xx = 0; xx < h.object_count(); ++xx) {
        const std::size_t target = s.whisker_left(v, o, o, xx, alpha);
        std::size_t found = npos;
        for (std::size_t b : h.hom(s.tensor(v, o, o, xx, unit), xx))
          if (s.whisker_right(v, o, o, b, unit) == target) found = b;
        if (found == npos) throw std::logic_error("fair2_to_bicat: no right constraint at " + h.object_id(xx));
        t.right[v].push_back(found);
      }
    }
    c.units.push_back(std::move(t));
  }
  return c;
}

Verdict validate_bifunctor(const StrictCompBicategory& from, const StrictCompBicategory& to,
                           const BifunctorStrict& f) {
  Verdict v;
  const SemiTwoCategory& s = from.cells;
  const SemiTwoCategory& d = to.cells;
  const std::size_t n = s.object_count();
  if (f.objects.size() != n || f.homs.size() != n * n || f.unit_comparisons.size() != n) {
    v.add("bifunctor data has the wrong shape");
    return v;
  }
  for (std::size_t o : f.objects)
    if (o >= d.object_count()) {
      v.add("object map out of range");
      return v;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = f.homs[x * n + y];
      FinFunctor hf{s.hom(x, y), d.hom(f.objects[x], f.objects[y]), m.objects, m.arrows};
      v.merge(validate(hf), "Hom(" + s.objects()[x] + "," + s.objects()[y] + "): ");
    }
  if (!v.ok()) return v;
  auto fo = [&](std::size_t x, std::size_t y, std::size_t a) { return f.homs[x * n + y].objects[a]; };
  auto fa = [&](std::size_t x, std::size_t y, std::size_t a) { return f.homs[x * n + y].arrows[a]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t fx = f.objects[x], fy = f.objects[y], fz = f.objects[z];
        for (std::size_t a = 0; a < s.hom(x, y).object_count(); ++a)
          for (std::size_t b = 0; b < s.hom(y, z).object_count(); ++b)
            if (fo(x, z, s.tensor(x, y, z, a, b)) != d.tensor(fx, fy, fz, fo(x, y, a), fo(y, z, b)))
              v.add("composition of 1-cells not preserved at (" + s.hom(x, y).object_id(a) + ", " +
                    s.hom(y, z).object_id(b) + ")");
        for (std::size_t a = 0; a < s.hom(x, y).arrow_count(); ++a)
          for (std::size_t b = 0; b < s.hom(y, z).arrow_count(); ++b)
            if (fa(x, z, s.tensor2(x, y, z, a, b)) != d.tensor2(fx, fy, fz, fa(x, y, a), fa(y, z, b)))
              v.add("composition of 2-cells not preserved at (" + s.hom(x, y).arrow_id(a) + ", " +
                    s.hom(y, z).arrow_id(b) + ")");
      }
  if (!v.ok()) return v;
  for (std::size_t o = 0; o < n; ++o) {
    const std::size_t fo_ = f.objects[o];
    const IdentityTriple& t = from.units[o];
    const IdentityTriple& t2 = to.units[fo_];
    const FinCategory& hoo = d.hom(fo_, fo_);
    const std::size_t phi = f.unit_comparisons[o];
    const std::string& on = s.objects()[o];
    if (phi >= hoo.arrow_count() || hoo.src(phi) != t2.unit || hoo.tgt(phi) != fo(o, o, t.unit)) {
      v.add("unit comparison at " + on + " has the wrong endpoints");
      continue;
    }
    if (!hoo.inverse(phi)) v.add("unit comparison at " + on + " is not invertible");
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < s.hom(o, z).object_count(); ++y) {
        const FinCategory& h = d.hom(fo_, f.objects[z]);
        const std::size_t lhs = t2.left[f.objects[z]][fo(o, z, y)];
        const std::size_t rhs = h.compose(d.whisker_right(fo_, fo_, f.objects[z], phi, fo(o, z, y)), fa(o, z, t.left[z][y]));
        if (lhs != rhs) v.add("unit comparison at " + on + " incompatible with lambda_" + s.hom(o, z).object_id(y));
      }
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < s.hom(w, o).object_count(); ++x) {
        const FinCategory& h = d.hom(f.objects[w], fo_);
        const std::size_t lhs = t2.right[f.objects[w]][fo(w, o, x)];
        const std::size_t rhs = h.compose(d.whisker_left(f.objects[w], fo_, fo_, fo(w, o, x), phi), fa(w, o, t.right[w][x]));
        if (lhs != rhs) v.add("unit comparison at " + on + " incompatible with rho_" + s.hom(w, o).object_id(x));
      }
  }
  return v;
}

}  // namespace fatdelta
