#include "fatdelta/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fatdelta {

void Verdict::merge(const Verdict& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

// ---------------------------------------------------------------------------
// FinCategory

std::size_t FinCategory::add_object(std::string id) {
  if (object_index_.count(id)) throw std::invalid_argument("duplicate object id `" + id + "`");
  object_index_.emplace(id, objects_.size());
  objects_.push_back(std::move(id));
  identities_.push_back(npos);
  return objects_.size() - 1;
}

std::size_t FinCategory::add_arrow(std::string id, std::size_t src, std::size_t tgt) {
  if (arrow_index_.count(id)) throw std::invalid_argument("duplicate arrow id `" + id + "`");
  if (src >= objects_.size() || tgt >= objects_.size())
    throw std::invalid_argument("arrow `" + id + "` has an endpoint out of range");
  arrow_index_.emplace(id, arrows_.size());
  arrows_.push_back({std::move(id), src, tgt});
  return arrows_.size() - 1;
}

void FinCategory::set_identity(std::size_t object, std::size_t arrow) {
  if (object >= objects_.size() || (arrow != npos && arrow >= arrows_.size()))
    throw std::invalid_argument("set_identity: out of range");
  identities_[object] = arrow;
}

void FinCategory::set_compose(std::size_t f, std::size_t g, std::size_t fg) {
  if (f >= arrows_.size() || g >= arrows_.size() || (fg != npos && fg >= arrows_.size()))
    throw std::invalid_argument("set_compose: arrow out of range");
  if (fg == npos)
    compose_.erase(key(f, g));
  else
    compose_[key(f, g)] = fg;
}

bool FinCategory::has_identities() const {
  return std::none_of(identities_.begin(), identities_.end(), [](std::size_t a) { return a == npos; });
}

std::size_t FinCategory::compose(std::size_t f, std::size_t g) const {
  auto it = compose_.find(key(f, g));
  return it == compose_.end() ? npos : it->second;
}

std::size_t FinCategory::then(std::size_t f, std::size_t g) const {
  const std::size_t r = compose(f, g);
  if (r == npos) throw std::logic_error("composite of `" + arrow_id(f) + "` and `" + arrow_id(g) + "` is undefined");
  return r;
}

std::optional<std::size_t> FinCategory::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FinCategory::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinCategory::object_index(const std::string& id) const {
  if (auto i = find_object(id)) return *i;
  throw std::out_of_range("unknown object `" + id + "`");
}

std::size_t FinCategory::arrow_index(const std::string& id) const {
  if (auto i = find_arrow(id)) return *i;
  throw std::out_of_range("unknown arrow `" + id + "`");
}

std::vector<std::size_t> FinCategory::hom(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].src == x && arrows_[a].tgt == y) out.push_back(a);
  return out;
}

bool FinCategory::is_identity_arrow(std::size_t a) const { return identities_.at(src(a)) == a; }

std::optional<std::size_t> FinCategory::inverse(std::size_t a) const {
  const std::size_t x = src(a), y = tgt(a);
  for (std::size_t b : hom(y, x))
    if (compose(a, b) == identities_[x] && compose(b, a) == identities_[y]) return b;
  return std::nullopt;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return objects_ == other.objects_ && arrows_ == other.arrows_ && identities_ == other.identities_ &&
         compose_ == other.compose_;
}

FinFunctor FinFunctor::identity(const FinCategory& c) {
  FinFunctor f{c, c, {}, {}};
  f.obj_map.resize(c.object_count());
  f.arr_map.resize(c.arrow_count());
  std::iota(f.obj_map.begin(), f.obj_map.end(), std::size_t{0});
  std::iota(f.arr_map.begin(), f.arr_map.end(), std::size_t{0});
  return f;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::vector<std::vector<std::size_t>> arrows_by_source(const FinCategory& c) {
  std::vector<std::vector<std::size_t>> out(c.object_count());
  for (std::size_t a = 0; a < c.arrow_count(); ++a) out[c.src(a)].push_back(a);
  return out;
}

}  // namespace

Verdict validate_semi(const FinCategory& c) {
  Verdict v;
  const auto out = arrows_by_source(c);
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      const std::size_t fg = c.compose(f, g);
      const bool composable = c.tgt(f) == c.src(g);
      if (!composable) {
        if (fg != npos)
          v.add("composite defined for non-composable pair (" + c.arrow_id(f) + ", " + c.arrow_id(g) + ")");
        continue;
      }
      if (fg == npos) {
        v.add("composite missing for (" + c.arrow_id(f) + ", " + c.arrow_id(g) + ")");
      } else if (c.src(fg) != c.src(f) || c.tgt(fg) != c.tgt(g)) {
        v.add("composite of (" + c.arrow_id(f) + ", " + c.arrow_id(g) + ") has wrong endpoints");
      }
    }
  }
  if (!v.ok()) return v;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g : out[c.tgt(f)])
      for (std::size_t h : out[c.tgt(g)])
        if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
          v.add("associativity fails on (" + c.arrow_id(f) + ", " + c.arrow_id(g) + ", " + c.arrow_id(h) + ")");
  return v;
}

Verdict validate(const FinCategory& c) {
  Verdict v = validate_semi(c);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const std::size_t id = c.identity(x);
    if (id == npos) {
      v.add("object `" + c.object_id(x) + "` has no identity");
      continue;
    }
    if (c.src(id) != x || c.tgt(id) != x) {
      v.add("identity of `" + c.object_id(x) + "` is not an endo-arrow on it");
      continue;
    }
  }
  if (!v.ok()) return v;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    if (c.compose(c.identity(c.src(a)), a) != a) v.add("left identity law fails for `" + c.arrow_id(a) + "`");
    if (c.compose(a, c.identity(c.tgt(a))) != a) v.add("right identity law fails for `" + c.arrow_id(a) + "`");
  }
  return v;
}

Verdict validate(const FinFunctor& f) {
  Verdict v;
  v.merge(validate(f.src), "source: ");
  v.merge(validate(f.dst), "target: ");
  if (!v.ok()) return v;
  if (f.obj_map.size() != f.src.object_count() || f.arr_map.size() != f.src.arrow_count()) {
    v.add("functor maps are not total");
    return v;
  }
  for (std::size_t x : f.obj_map)
    if (x >= f.dst.object_count()) v.add("object image out of range");
  for (std::size_t a : f.arr_map)
    if (a >= f.dst.arrow_count()) v.add("arrow image out of range");
  if (!v.ok()) return v;
  for (std::size_t a = 0; a < f.src.arrow_count(); ++a) {
    const std::size_t fa = f.arr_map[a];
    if (f.dst.src(fa) != f.obj_map[f.src.src(a)] || f.dst.tgt(fa) != f.obj_map[f.src.tgt(a)])
      v.add("endpoints not preserved by `" + f.src.arrow_id(a) + "`");
  }
  for (std::size_t x = 0; x < f.src.object_count(); ++x)
    if (f.arr_map[f.src.identity(x)] != f.dst.identity(f.obj_map[x]))
      v.add("identity of `" + f.src.object_id(x) + "` not preserved");
  for (std::size_t a = 0; a < f.src.arrow_count(); ++a)
    for (std::size_t b = 0; b < f.src.arrow_count(); ++b) {
      const std::size_t ab = f.src.compose(a, b);
      if (ab == npos) continue;
      if (f.arr_map[ab] != f.dst.compose(f.arr_map[a], f.arr_map[b]))
        v.add("composite of (" + f.src.arrow_id(a) + ", " + f.src.arrow_id(b) + ") not preserved");
    }
  return v;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.dst == g.src)) throw std::invalid_argument("compose_functors: codomain does not match domain");
  FinFunctor h{f.src, g.dst, {}, {}};
  for (std::size_t x : f.obj_map) h.obj_map.push_back(g.obj_map.at(x));
  for (std::size_t a : f.arr_map) h.arr_map.push_back(g.arr_map.at(a));
  return h;
}

bool is_isomorphism(const FinFunctor& f) {
  if (!validate(f).ok()) return false;
  if (f.src.object_count() != f.dst.object_count() || f.src.arrow_count() != f.dst.arrow_count()) return false;
  std::vector<bool> hit_o(f.dst.object_count()), hit_a(f.dst.arrow_count());
  for (std::size_t x : f.obj_map) {
    if (hit_o[x]) return false;
    hit_o[x] = true;
  }
  for (std::size_t a : f.arr_map) {
    if (hit_a[a]) return false;
    hit_a[a] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Components and truncation

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

ObjectQuotient quotient_from(const FinCategory& c, UnionFind& uf) {
  ObjectQuotient q;
  q.class_of.assign(c.object_count(), npos);
  std::vector<std::size_t> class_of_root(c.object_count(), npos);
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const std::size_t r = uf.find(x);
    if (class_of_root[r] == npos) {
      class_of_root[r] = q.classes.size();
      q.classes.push_back(c.object_id(x));
    }
    q.class_of[x] = class_of_root[r];
  }
  return q;
}

}  // namespace

ObjectQuotient pi0(const FinCategory& c) {
  UnionFind uf(c.object_count());
  for (std::size_t a = 0; a < c.arrow_count(); ++a) uf.unite(c.src(a), c.tgt(a));
  return quotient_from(c, uf);
}

Truncation tau0(const FinCategory& c) {
  UnionFind uf(c.object_count());
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (c.inverse(a)) uf.unite(c.src(a), c.tgt(a));
  Truncation t;
  t.classes = quotient_from(c, uf);
  const ObjectQuotient comps = pi0(c);
  t.to_components.assign(t.classes.classes.size(), npos);
  for (std::size_t x = 0; x < c.object_count(); ++x) t.to_components[t.classes.class_of[x]] = comps.class_of[x];
  return t;
}

// ---------------------------------------------------------------------------
// Standard categories

FinCategory delta_discrete(const std::vector<std::string>& index_set) {
  FinCategory c;
  for (const auto& i : index_set) c.add_object(i);
  for (std::size_t x = 0; x < index_set.size(); ++x) {
    const std::size_t a = c.add_arrow("id_" + index_set[x], x, x);
    c.set_identity(x, a);
    c.set_compose(a, a, a);
  }
  return c;
}

bool is_discrete(const FinCategory& c) {
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (!c.is_identity_arrow(a)) return false;
  return true;
}

FinCategory terminal_category() { return delta_discrete({"*"}); }
FinCategory empty_category() { return {}; }

FinCategory ordinal_category(std::size_t n) {
  FinCategory c;
  for (std::size_t i = 0; i <= n; ++i) c.add_object(std::to_string(i));
  std::vector<std::vector<std::size_t>> arr(n + 1, std::vector<std::size_t>(n + 1, npos));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      arr[i][j] = c.add_arrow(i == j ? "id_" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j), i, j);
  for (std::size_t i = 0; i <= n; ++i) c.set_identity(i, arr[i][i]);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) c.set_compose(arr[i][j], arr[j][k], arr[i][k]);
  return c;
}

namespace {

// Product of a and b restricted to the given object/arrow pairs.
struct PairProduct {
  FinCategory category;
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

PairProduct product_on(const FinCategory& a, const FinCategory& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& object_pairs) {
  PairProduct p;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> obj_index;
  for (auto [x, y] : object_pairs) {
    obj_index[{x, y}] = p.category.add_object(a.object_id(x) + ":" + b.object_id(y));
    p.objects.emplace_back(x, y);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arr_index;
  for (auto [x, y] : object_pairs)
    for (auto [x2, y2] : object_pairs)
      for (std::size_t f : a.hom(x, x2))
        for (std::size_t g : b.hom(y, y2)) {
          arr_index[{f, g}] =
              p.category.add_arrow(a.arrow_id(f) + ":" + b.arrow_id(g), obj_index[{x, y}], obj_index[{x2, y2}]);
          p.arrows.emplace_back(f, g);
        }
  for (std::size_t i = 0; i < p.objects.size(); ++i) {
    auto [x, y] = p.objects[i];
    if (a.identity(x) != npos && b.identity(y) != npos) p.category.set_identity(i, arr_index.at({a.identity(x), b.identity(y)}));
  }
  for (std::size_t i = 0; i < p.arrows.size(); ++i)
    for (std::size_t j = 0; j < p.arrows.size(); ++j) {
      const std::size_t fg = a.compose(p.arrows[i].first, p.arrows[j].first);
      const std::size_t hk = b.compose(p.arrows[i].second, p.arrows[j].second);
      if (fg == npos || hk == npos) continue;
      auto it = arr_index.find({fg, hk});
      if (it != arr_index.end()) p.category.set_compose(i, j, it->second);
    }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace

FinCategory binary_product(const FinCategory& a, const FinCategory& b) {
  return product_on(a, b, all_pairs(a.object_count(), b.object_count())).category;
}

FinFunctor functor_from_product(const FinCategory& a, const FinCategory& b, const FinCategory& dst,
                                const std::function<std::size_t(std::size_t, std::size_t)>& on_objects,
                                const std::function<std::size_t(std::size_t, std::size_t)>& on_arrows) {
  auto p = product_on(a, b, all_pairs(a.object_count(), b.object_count()));
  FinFunctor f{std::move(p.category), dst, {}, {}};
  for (auto [x, y] : p.objects) f.obj_map.push_back(on_objects(x, y));
  for (auto [g, h] : p.arrows) f.arr_map.push_back(on_arrows(g, h));
  return f;
}

FinFunctor product_projection(const FinCategory& a, const FinCategory& b, int side) {
  auto p = product_on(a, b, all_pairs(a.object_count(), b.object_count()));
  FinFunctor f{p.category, side == 0 ? a : b, {}, {}};
  for (auto [x, y] : p.objects) f.obj_map.push_back(side == 0 ? x : y);
  for (auto [g, h] : p.arrows) f.arr_map.push_back(side == 0 ? g : h);
  return f;
}

namespace {

// Appends c into out with prefixed ids; returns the object/arrow offsets.
std::pair<std::size_t, std::size_t> append_prefixed(FinCategory& out, const FinCategory& c, const std::string& prefix) {
  const std::size_t o0 = out.object_count(), a0 = out.arrow_count();
  for (std::size_t x = 0; x < c.object_count(); ++x) out.add_object(prefix + c.object_id(x));
  for (std::size_t a = 0; a < c.arrow_count(); ++a) out.add_arrow(prefix + c.arrow_id(a), o0 + c.src(a), o0 + c.tgt(a));
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (c.identity(x) != npos) out.set_identity(o0 + x, a0 + c.identity(x));
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < c.arrow_count(); ++g)
      if (std::size_t fg = c.compose(f, g); fg != npos) out.set_compose(a0 + f, a0 + g, a0 + fg);
  return {o0, a0};
}

}  // namespace

FinCategory binary_coproduct(const FinCategory& a, const FinCategory& b) {
  FinCategory out;
  append_prefixed(out, a, "inl.");
  append_prefixed(out, b, "inr.");
  return out;
}

FinFunctor coproduct_injection(const FinCategory& a, const FinCategory& b, int side) {
  const FinCategory& part = side == 0 ? a : b;
  FinFunctor f{part, binary_coproduct(a, b), {}, {}};
  const std::size_t o0 = side == 0 ? 0 : a.object_count();
  const std::size_t a0 = side == 0 ? 0 : a.arrow_count();
  for (std::size_t x = 0; x < part.object_count(); ++x) f.obj_map.push_back(o0 + x);
  for (std::size_t g = 0; g < part.arrow_count(); ++g) f.arr_map.push_back(a0 + g);
  return f;
}

FinCategory coproduct(const std::vector<FinCategory>& family) {
  FinCategory out;
  for (std::size_t i = 0; i < family.size(); ++i) append_prefixed(out, family[i], std::to_string(i) + ".");
  return out;
}

FinCategory full_subcategory(const FinCategory& c, const std::vector<std::size_t>& objects) {
  FinCategory out;
  std::vector<std::size_t> new_obj(c.object_count(), npos);
  for (std::size_t x : objects) new_obj[x] = out.add_object(c.object_id(x));
  std::vector<std::size_t> new_arr(c.arrow_count(), npos);
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (new_obj[c.src(a)] != npos && new_obj[c.tgt(a)] != npos)
      new_arr[a] = out.add_arrow(c.arrow_id(a), new_obj[c.src(a)], new_obj[c.tgt(a)]);
  for (std::size_t x : objects)
    if (c.identity(x) != npos) out.set_identity(new_obj[x], new_arr[c.identity(x)]);
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    if (new_arr[f] == npos) continue;
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      if (new_arr[g] == npos) continue;
      const std::size_t fg = c.compose(f, g);
      if (fg != npos) out.set_compose(new_arr[f], new_arr[g], new_arr[fg]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition and fibre products over discrete categories

std::vector<FinCategory> decompose_over_discrete(const FinFunctor& f) {
  if (!is_discrete(f.dst)) throw std::invalid_argument("decompose_over_discrete: codomain is not discrete");
  if (auto v = validate(f); !v.ok()) throw std::invalid_argument("decompose_over_discrete: " + v.violations.front());
  std::vector<FinCategory> out;
  for (std::size_t i = 0; i < f.dst.object_count(); ++i) {
    std::vector<std::size_t> fibre;
    for (std::size_t x = 0; x < f.src.object_count(); ++x)
      if (f.obj_map[x] == i) fibre.push_back(x);
    out.push_back(full_subcategory(f.src, fibre));
  }
  return out;
}

FibreProduct fibre_product_over_discrete(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.dst == g.dst)) throw std::invalid_argument("fibre_product_over_discrete: codomains differ");
  if (!is_discrete(f.dst)) throw std::invalid_argument("fibre_product_over_discrete: codomain is not discrete");
  for (const FinFunctor* h : {&f, &g})
    if (auto v = validate(*h); !v.ok())
      throw std::invalid_argument("fibre_product_over_discrete: " + v.violations.front());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < f.dst.object_count(); ++i)
    for (std::size_t x = 0; x < f.src.object_count(); ++x)
      if (f.obj_map[x] == i)
        for (std::size_t y = 0; y < g.src.object_count(); ++y)
          if (g.obj_map[y] == i) pairs.emplace_back(x, y);
  // arrows between objects of different fibres cannot exist, so the product
  // on these object pairs is exactly the sum of the fibre products
  auto p = product_on(f.src, g.src, pairs);
  FibreProduct out{p.category, {p.category, f.src, {}, {}}, {p.category, g.src, {}, {}}};
  for (auto [x, y] : p.objects) {
    out.left.obj_map.push_back(x);
    out.right.obj_map.push_back(y);
  }
  for (auto [a, b] : p.arrows) {
    out.left.arr_map.push_back(a);
    out.right.arr_map.push_back(b);
  }
  return out;
}

FinFunctor mediate(const FibreProduct& fp, const FinFunctor& p, const FinFunctor& q) {
  if (!(p.src == q.src)) throw std::invalid_argument("mediate: cone legs have different domains");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> obj, arr;
  for (std::size_t i = 0; i < fp.category.object_count(); ++i) obj[{fp.left.obj_map[i], fp.right.obj_map[i]}] = i;
  for (std::size_t i = 0; i < fp.category.arrow_count(); ++i) arr[{fp.left.arr_map[i], fp.right.arr_map[i]}] = i;
  FinFunctor m{p.src, fp.category, {}, {}};
  for (std::size_t x = 0; x < p.src.object_count(); ++x) {
    auto it = obj.find({p.obj_map[x], q.obj_map[x]});
    if (it == obj.end()) throw std::invalid_argument("mediate: cone does not commute on objects");
    m.obj_map.push_back(it->second);
  }
  for (std::size_t a = 0; a < p.src.arrow_count(); ++a) {
    auto it = arr.find({p.arr_map[a], q.arr_map[a]});
    if (it == arr.end()) throw std::invalid_argument("mediate: cone does not commute on arrows");
    m.arr_map.push_back(it->second);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Equivalences

EquimorphismReport equimorphism_report(const FinFunctor& f) {
  EquimorphismReport r;
  r.fully_faithful = true;
  for (std::size_t x = 0; x < f.src.object_count() && r.fully_faithful; ++x)
    for (std::size_t y = 0; y < f.src.object_count() && r.fully_faithful; ++y) {
      const auto src_hom = f.src.hom(x, y);
      const auto dst_hom = f.dst.hom(f.obj_map[x], f.obj_map[y]);
      if (src_hom.size() != dst_hom.size()) {
        r.fully_faithful = false;
        break;
      }
      std::vector<std::size_t> images;
      for (std::size_t a : src_hom) images.push_back(f.arr_map[a]);
      std::sort(images.begin(), images.end());
      r.fully_faithful = std::adjacent_find(images.begin(), images.end()) == images.end();
    }
  const Truncation t = tau0(f.dst);
  std::vector<bool> hit(t.classes.classes.size(), false);
  for (std::size_t x : f.obj_map) hit[t.classes.class_of[x]] = true;
  r.essentially_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.equimorphism = r.fully_faithful && r.essentially_surjective;
  return r;
}

bool is_contractible(const FinCategory& c) {
  if (c.object_count() == 0) return false;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < c.object_count(); ++y)
      if (c.hom(x, y).size() != 1) return false;
  return true;
}

FinFunctor functor_from_ids(const FinCategory& src, const FinCategory& dst,
                            const std::map<std::string, std::string>& objects,
                            const std::map<std::string, std::string>& arrows) {
  FinFunctor f{src, dst, {}, {}};
  for (std::size_t x = 0; x < src.object_count(); ++x) f.obj_map.push_back(dst.object_index(objects.at(src.object_id(x))));
  for (std::size_t a = 0; a < src.arrow_count(); ++a) f.arr_map.push_back(dst.arrow_index(arrows.at(src.arrow_id(a))));
  return f;
}

std::vector<std::vector<std::size_t>> nerve_level(const FinCategory& c, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) {
    for (std::size_t x = 0; x < c.object_count(); ++x) out.push_back({x});
    return out;
  }
  std::vector<std::size_t> chain;
  auto rec = [&](auto&& self) -> void {
    if (chain.size() == k) {
      out.push_back(chain);
      return;
    }
    for (std::size_t a = 0; a < c.arrow_count(); ++a) {
      if (!chain.empty() && c.src(a) != c.tgt(chain.back())) continue;
      chain.push_back(a);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace fatdelta
