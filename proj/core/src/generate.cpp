#include "fatdelta/generate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace fatdelta::gen {

namespace {

struct Function {
  std::size_t src;
  std::size_t tgt;
  std::vector<std::size_t> values;

  bool operator==(const Function&) const = default;
};

// Closes the family under composition; false if it grows past cap.
bool close_under_composition(std::vector<Function>& family, std::size_t cap) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [f, g] : {std::pair{i, j}, std::pair{j, i}}) {
        if (family[f].tgt != family[g].src) continue;
        Function h{family[f].src, family[g].tgt, {}};
        for (std::size_t v : family[f].values) h.values.push_back(family[g].values[v]);
        if (std::find(family.begin(), family.end(), h) != family.end()) continue;
        family.push_back(std::move(h));
        if (family.size() > cap) return false;
      }
  return true;
}

std::size_t hom_position(const FinCategory& c, std::size_t a) {
  const auto h = c.hom(c.src(a), c.tgt(a));
  return static_cast<std::size_t>(std::find(h.begin(), h.end(), a) - h.begin());
}

// The unique-by-construction triple: first invertible component at each slot.
IdentityTriple first_components(const SemiTwoCategory& s, std::size_t o, std::size_t unit) {
  const std::size_t n = s.object_count();
  IdentityTriple t{o, unit, std::vector<std::vector<std::size_t>>(n), std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t z = 0; z < n; ++z) {
    const FinCategory& h = s.hom(o, z);
    for (std::size_t y = 0; y < h.object_count(); ++y) t.left[z].push_back(h.hom(s.tensor(o, o, z, unit, y), y).at(0));
  }
  for (std::size_t w = 0; w < n; ++w) {
    const FinCategory& h = s.hom(w, o);
    for (std::size_t x = 0; x < h.object_count(); ++x) t.right[w].push_back(h.hom(s.tensor(w, o, o, x, unit), x).at(0));
  }
  return t;
}

std::vector<std::string> object_ids(const FinCategory& c) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < c.object_count(); ++x) out.push_back(c.object_id(x));
  return out;
}

std::size_t max_hom_objects(const StrictCompBicategory& b) {
  std::size_t m = 0;
  for (std::size_t x = 0; x < b.cells.object_count(); ++x)
    for (std::size_t y = 0; y < b.cells.object_count(); ++y) m = std::max(m, b.cells.hom(x, y).object_count());
  return m;
}

}  // namespace

std::size_t below(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("below: empty range");
  return static_cast<std::size_t>(rng() % n);
}

ColouredOrdinal random_coloured_ordinal(Rng& rng, std::size_t max_dots) {
  const std::size_t dots = 1 + below(rng, max_dots);
  std::vector<bool> links;
  for (std::size_t i = 0; i + 1 < dots; ++i) links.push_back(below(rng, 2) == 1);
  return ColouredOrdinal(links);
}

FinCategory random_category(Rng& rng, std::size_t max_objects, std::size_t max_arrows) {
  const std::size_t k = 1 + below(rng, std::min(max_objects, max_arrows));
  std::vector<std::size_t> sizes;
  std::vector<Function> family;
  for (std::size_t i = 0; i < k; ++i) {
    sizes.push_back(1 + below(rng, 3));
    Function id{i, i, {}};
    for (std::size_t v = 0; v < sizes[i]; ++v) id.values.push_back(v);
    family.push_back(std::move(id));
  }
  const std::size_t attempts = below(rng, 2 * k + 2);
  for (std::size_t t = 0; t < attempts; ++t) {
    Function f{below(rng, k), below(rng, k), {}};
    for (std::size_t v = 0; v < sizes[f.src]; ++v) f.values.push_back(below(rng, sizes[f.tgt]));
    if (std::find(family.begin(), family.end(), f) != family.end()) continue;
    std::vector<Function> trial = family;
    trial.push_back(std::move(f));
    if (close_under_composition(trial, max_arrows)) family = std::move(trial);
  }

  FinCategory c;
  for (std::size_t i = 0; i < k; ++i) c.add_object("X" + std::to_string(i));
  for (std::size_t a = 0; a < family.size(); ++a)
    c.add_arrow(a < k ? "id_X" + std::to_string(a) : "f" + std::to_string(a - k), family[a].src, family[a].tgt);
  for (std::size_t i = 0; i < k; ++i) c.set_identity(i, i);
  for (std::size_t f = 0; f < family.size(); ++f)
    for (std::size_t g = 0; g < family.size(); ++g) {
      if (family[f].tgt != family[g].src) continue;
      Function h{family[f].src, family[g].tgt, {}};
      for (std::size_t v : family[f].values) h.values.push_back(family[g].values[v]);
      c.set_compose(f, g, static_cast<std::size_t>(std::find(family.begin(), family.end(), h) - family.begin()));
    }
  return c;
}

FinFunctor random_functor_to_discrete(Rng& rng, const FinCategory& c, std::size_t labels) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < labels; ++i) ids.push_back("i" + std::to_string(i));
  FinFunctor f{c, delta_discrete(ids), {}, {}};
  const ObjectQuotient comps = pi0(c);
  std::vector<std::size_t> label_of;
  for (std::size_t i = 0; i < comps.classes.size(); ++i) label_of.push_back(below(rng, labels));
  for (std::size_t x = 0; x < c.object_count(); ++x) f.obj_map.push_back(label_of[comps.class_of[x]]);
  for (std::size_t a = 0; a < c.arrow_count(); ++a) f.arr_map.push_back(f.dst.identity(f.obj_map[c.src(a)]));
  return f;
}

FairSetCategory random_fair_set(Rng& rng, std::size_t max_objects, std::size_t max_arrows) {
  FairSetCategory x = fair_nerve(random_category(rng, max_objects, max_arrows));
  for (FairUnit& u : x.units) u.id = "u_" + x.arrows.object_id(u.object);
  return x;
}

FairSetCategory random_fair_set_candidate(Rng& rng, std::size_t max_objects, std::size_t max_arrows) {
  FairSetCategory x = random_fair_set(rng, max_objects, max_arrows);
  for (FairUnit& u : x.units) {
    if (below(rng, 4) == 0) {
      u.arrow = below(rng, x.arrows.arrow_count());
      continue;
    }
    const auto endos = x.arrows.hom(u.object, u.object);
    u.arrow = endos[below(rng, endos.size())];
  }
  return x;
}

FairSetCategory left_zero_semigroup(std::size_t n) {
  if (n == 0) throw std::invalid_argument("left_zero_semigroup: n must be positive");
  FinCategory c;
  c.add_object("*");
  for (std::size_t i = 0; i < n; ++i) c.add_arrow("a" + std::to_string(i), 0, 0);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) c.set_compose(f, g, f);
  return FairSetCategory{std::move(c), {{"u", 0, 0}}};
}

StrictCompBicategory locally_discrete(const FinCategory& c) {
  SemiTwoCategory s(object_ids(c));
  const std::size_t n = c.object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      FinCategory h;
      for (std::size_t a : c.hom(x, y)) {
        const std::size_t o = h.add_object(c.arrow_id(a));
        const std::size_t i = h.add_arrow("id_" + c.arrow_id(a), o, o);
        h.set_identity(o, i);
        h.set_compose(i, i, i);
      }
      s.set_hom(x, y, std::move(h));
    }
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      const std::size_t x = c.src(f), y = c.tgt(f), z = c.tgt(g);
      const std::size_t fg = hom_position(c, c.then(f, g));
      s.set_tensor(x, y, z, hom_position(c, f), hom_position(c, g), fg);
      s.set_tensor2(x, y, z, hom_position(c, f), hom_position(c, g), fg);
    }
  StrictCompBicategory b{std::move(s), {}};
  for (std::size_t x = 0; x < n; ++x) b.units.push_back(strict_triple(b.cells, x, hom_position(c, c.identity(x))));
  return b;
}

StrictCompBicategory codiscrete_bicategory(const FinCategory& c) {
  SemiTwoCategory s(object_ids(c));
  const std::size_t n = c.object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      FinCategory h;
      const auto arrows = c.hom(x, y);
      for (std::size_t a : arrows) h.add_object(c.arrow_id(a));
      const std::size_t m = arrows.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h.add_arrow(h.object_id(i) + ">" + h.object_id(j), i, j);
      for (std::size_t i = 0; i < m; ++i) h.set_identity(i, i * m + i);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k) h.set_compose(i * m + j, j * m + k, i * m + k);
      s.set_hom(x, y, std::move(h));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto l = c.hom(x, y), r = c.hom(y, z);
        const std::size_t ml = l.size(), mr = r.size(), mo = s.hom(x, z).object_count();
        for (std::size_t a = 0; a < ml; ++a)
          for (std::size_t b = 0; b < mr; ++b) s.set_tensor(x, y, z, a, b, hom_position(c, c.then(l[a], r[b])));
        for (std::size_t a = 0; a < ml * ml; ++a)
          for (std::size_t b = 0; b < mr * mr; ++b) {
            const std::size_t from = s.tensor(x, y, z, a / ml, b / mr);
            const std::size_t to = s.tensor(x, y, z, a % ml, b % mr);
            s.set_tensor2(x, y, z, a, b, from * mo + to);
          }
      }
  StrictCompBicategory b{std::move(s), {}};
  for (std::size_t x = 0; x < n; ++x) b.units.push_back(strict_triple(b.cells, x, hom_position(c, c.identity(x))));
  return b;
}

StrictCompBicategory codiscrete_cyclic(std::size_t n, bool shifted) {
  if (n == 0) throw std::invalid_argument("codiscrete_cyclic: n must be positive");
  FinCategory g;
  g.add_object("*");
  for (std::size_t i = 0; i < n; ++i) g.add_arrow(std::to_string(i), 0, 0);
  g.set_identity(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set_compose(i, j, (i + j) % n);
  StrictCompBicategory b = codiscrete_bicategory(g);
  if (shifted) b.units[0] = first_components(b.cells, 0, 1 % n);
  return b;
}

StrictCompBicategory two_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("two_group: n must be positive");
  FinCategory h;
  h.add_object("e");
  for (std::size_t i = 0; i < n; ++i) h.add_arrow("g" + std::to_string(i), 0, 0);
  h.set_identity(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.set_compose(i, j, (i + j) % n);
  SemiTwoCategory s({"*"});
  s.set_hom(0, 0, std::move(h));
  s.set_tensor(0, 0, 0, 0, 0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.set_tensor2(0, 0, 0, i, j, (i + j) % n);
  StrictCompBicategory b{std::move(s), {}};
  b.units.push_back(strict_triple(b.cells, 0, 0));
  return b;
}

StrictCompBicategory chain_monoidal(std::size_t k, bool use_max) {
  SemiTwoCategory s({"*"});
  s.set_hom(0, 0, ordinal_category(k));
  const FinCategory& h = s.hom(0, 0);
  auto op = [&](std::size_t a, std::size_t b) { return use_max ? std::max(a, b) : std::min(a, b); };
  for (std::size_t a = 0; a <= k; ++a)
    for (std::size_t b = 0; b <= k; ++b) s.set_tensor(0, 0, 0, a, b, op(a, b));
  for (std::size_t f = 0; f < h.arrow_count(); ++f)
    for (std::size_t g = 0; g < h.arrow_count(); ++g)
      s.set_tensor2(0, 0, 0, f, g, h.hom(op(h.src(f), h.src(g)), op(h.tgt(f), h.tgt(g))).at(0));
  StrictCompBicategory b{std::move(s), {}};
  b.units.push_back(strict_triple(b.cells, 0, use_max ? 0 : k));
  return b;
}

StrictCompBicategory monoidal_product(const StrictCompBicategory& a, const StrictCompBicategory& b) {
  if (a.cells.object_count() != 1 || b.cells.object_count() != 1)
    throw std::invalid_argument("monoidal_product: both factors need one object");
  const FinCategory& ha = a.cells.hom(0, 0);
  const FinCategory& hb = b.cells.hom(0, 0);
  const FinFunctor pa = product_projection(ha, hb, 0);
  const FinFunctor pb = product_projection(ha, hb, 1);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_at;
  for (std::size_t i = 0; i < pa.arr_map.size(); ++i) arrow_at[{pa.arr_map[i], pb.arr_map[i]}] = i;
  const std::size_t mb = hb.object_count();

  SemiTwoCategory s({"*"});
  s.set_hom(0, 0, pa.src);
  const FinCategory& h = s.hom(0, 0);
  for (std::size_t x = 0; x < h.object_count(); ++x)
    for (std::size_t y = 0; y < h.object_count(); ++y)
      s.set_tensor(0, 0, 0, x, y,
                   a.cells.tensor(0, 0, 0, x / mb, y / mb) * mb + b.cells.tensor(0, 0, 0, x % mb, y % mb));
  for (std::size_t f = 0; f < h.arrow_count(); ++f)
    for (std::size_t g = 0; g < h.arrow_count(); ++g)
      s.set_tensor2(0, 0, 0, f, g,
                    arrow_at.at({a.cells.tensor2(0, 0, 0, pa.arr_map[f], pa.arr_map[g]),
                                 b.cells.tensor2(0, 0, 0, pb.arr_map[f], pb.arr_map[g])}));
  const IdentityTriple& ta = a.units[0];
  const IdentityTriple& tb = b.units[0];
  IdentityTriple t{0, ta.unit * mb + tb.unit, {{}}, {{}}};
  for (std::size_t y = 0; y < h.object_count(); ++y) {
    t.left[0].push_back(arrow_at.at({ta.left[0][y / mb], tb.left[0][y % mb]}));
    t.right[0].push_back(arrow_at.at({ta.right[0][y / mb], tb.right[0][y % mb]}));
  }
  return StrictCompBicategory{std::move(s), {std::move(t)}};
}

std::vector<StrictCompBicategory> bicategory_corpus(Rng& rng, std::size_t random_extra) {
  std::vector<StrictCompBicategory> out;
  out.push_back(codiscrete_cyclic(2, false));
  out.push_back(codiscrete_cyclic(2, true));
  out.push_back(two_group(2));
  out.push_back(two_group(3));
  out.push_back(chain_monoidal(2, true));
  out.push_back(chain_monoidal(2, false));
  out.push_back(monoidal_product(codiscrete_cyclic(2, false), two_group(2)));
  out.push_back(locally_discrete(ordinal_category(1)));
  out.push_back(codiscrete_bicategory(ordinal_category(1)));
  for (std::size_t i = 0; i < random_extra;) {
    const FinCategory c = random_category(rng, 2, 8);
    StrictCompBicategory b = i % 2 == 0 ? codiscrete_bicategory(c) : locally_discrete(c);
    if (max_hom_objects(b) > 4) continue;
    out.push_back(std::move(b));
    ++i;
  }
  return out;
}

}  // namespace fatdelta::gen
