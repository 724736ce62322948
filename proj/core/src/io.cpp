#include "fatdelta/io.hpp"

#include <functional>

namespace fatdelta::io {

namespace {

// Runs a reader, turning library exceptions into FormatError.
template <typename F>
auto reading(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with key `") + key + "`");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key `") + key + "`");
  return *it;
}

std::string str(const json& j) {
  if (!j.is_string()) throw FormatError("expected a string, found " + j.dump());
  return j.get<std::string>();
}

const json& array(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array, found " + j.dump());
  return j;
}

json table_json(const FinCategory& l, const FinCategory& r, const FinCategory& out, const TensorTable& t) {
  json objects = json::array(), arrows = json::array();
  for (std::size_t a = 0; a < l.object_count(); ++a)
    for (std::size_t b = 0; b < r.object_count(); ++b) {
      const std::size_t c = t.cells.at(a * r.object_count() + b);
      objects.push_back({l.object_id(a), r.object_id(b), c == npos ? json(nullptr) : json(out.object_id(c))});
    }
  for (std::size_t a = 0; a < l.arrow_count(); ++a)
    for (std::size_t b = 0; b < r.arrow_count(); ++b) {
      const std::size_t c = t.two_cells.at(a * r.arrow_count() + b);
      arrows.push_back({l.arrow_id(a), r.arrow_id(b), c == npos ? json(nullptr) : json(out.arrow_id(c))});
    }
  return {{"objects", objects}, {"arrows", arrows}};
}

TensorTable table_from_json(const FinCategory& l, const FinCategory& r, const FinCategory& out, const json& j) {
  TensorTable t{std::vector<std::size_t>(l.object_count() * r.object_count(), npos),
                std::vector<std::size_t>(l.arrow_count() * r.arrow_count(), npos)};
  for (const json& e : array(field(j, "objects"))) {
    if (!e.is_array() || e.size() != 3) throw FormatError("tensor entries are triples");
    if (e[2].is_null()) continue;
    t.cells.at(l.object_index(str(e[0])) * r.object_count() + r.object_index(str(e[1]))) = out.object_index(str(e[2]));
  }
  for (const json& e : array(field(j, "arrows"))) {
    if (!e.is_array() || e.size() != 3) throw FormatError("tensor entries are triples");
    if (e[2].is_null()) continue;
    t.two_cells.at(l.arrow_index(str(e[0])) * r.arrow_count() + r.arrow_index(str(e[1]))) = out.arrow_index(str(e[2]));
  }
  return t;
}

json id_map(const FinCategory& src, const FinCategory& dst, const std::vector<std::size_t>& objects, bool arrows) {
  json m = json::object();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string& key = arrows ? src.arrow_id(i) : src.object_id(i);
    if (objects[i] == npos)
      m[key] = nullptr;
    else
      m[key] = arrows ? dst.arrow_id(objects[i]) : dst.object_id(objects[i]);
  }
  return m;
}

std::vector<std::size_t> id_map_from_json(const FinCategory& src, const FinCategory& dst, const json& j, bool arrows) {
  if (!j.is_object()) throw FormatError("expected an id map");
  const std::size_t n = arrows ? src.arrow_count() : src.object_count();
  std::vector<std::size_t> out(n, npos);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::size_t i = arrows ? src.arrow_index(it.key()) : src.object_index(it.key());
    if (it.value().is_null()) continue;
    out[i] = arrows ? dst.arrow_index(str(it.value())) : dst.object_index(str(it.value()));
  }
  return out;
}

json semi_two_fields(const SemiTwoCategory& s) {
  const std::size_t n = s.object_count();
  json homs = json::array(), tensor = json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      homs.push_back({{"src", s.objects()[x]}, {"tgt", s.objects()[y]}, {"category", to_json(s.hom(x, y))}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        json t = table_json(s.hom(x, y), s.hom(y, z), s.hom(x, z), s.table(x, y, z));
        t["x"] = s.objects()[x];
        t["y"] = s.objects()[y];
        t["z"] = s.objects()[z];
        tensor.push_back(std::move(t));
      }
  return {{"objects", s.objects()}, {"homs", homs}, {"tensor", tensor}};
}

json triple_fields(const SemiTwoCategory& s, const IdentityTriple& t) {
  const std::size_t o = t.object;
  json lambda = json::array(), rho = json::array();
  for (std::size_t z = 0; z < s.object_count(); ++z) {
    const FinCategory& h = s.hom(o, z);
    for (std::size_t y = 0; y < t.left.at(z).size(); ++y)
      lambda.push_back({{"tgt", s.objects()[z]}, {"cell", h.object_id(y)}, {"component", h.arrow_id(t.left[z][y])}});
  }
  for (std::size_t w = 0; w < s.object_count(); ++w) {
    const FinCategory& h = s.hom(w, o);
    for (std::size_t x = 0; x < t.right.at(w).size(); ++x)
      rho.push_back({{"src", s.objects()[w]}, {"cell", h.object_id(x)}, {"component", h.arrow_id(t.right[w][x])}});
  }
  return {{"object", s.objects()[o]}, {"I", s.hom(o, o).object_id(t.unit)}, {"lambda", lambda}, {"rho", rho}};
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string emit(const json& j) { return j.dump(); }

json to_json(const FinCategory& c) {
  json objects = json::array(), arrows = json::array(), identities = json::object(), compose = json::array();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    objects.push_back(c.object_id(x));
    if (c.identity(x) != npos) identities[c.object_id(x)] = c.arrow_id(c.identity(x));
  }
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    arrows.push_back({{"id", c.arrow_id(a)}, {"src", c.object_id(c.src(a))}, {"tgt", c.object_id(c.tgt(a))}});
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < c.arrow_count(); ++g)
      if (std::size_t fg = c.compose(f, g); fg != npos) compose.push_back({c.arrow_id(f), c.arrow_id(g), c.arrow_id(fg)});
  return {{"objects", objects}, {"arrows", arrows}, {"identities", identities}, {"compose", compose}};
}

FinCategory category_from_json(const json& j) {
  return reading("category", [&] {
    FinCategory c;
    for (const json& o : array(field(j, "objects"))) c.add_object(str(o));
    for (const json& a : array(field(j, "arrows")))
      c.add_arrow(str(field(a, "id")), c.object_index(str(field(a, "src"))), c.object_index(str(field(a, "tgt"))));
    if (auto it = j.find("identities"); it != j.end()) {
      if (!it->is_object()) throw FormatError("`identities` must be an object");
      for (auto e = it->begin(); e != it->end(); ++e) c.set_identity(c.object_index(e.key()), c.arrow_index(str(e.value())));
    }
    if (auto it = j.find("compose"); it != j.end())
      for (const json& e : array(*it)) {
        if (!e.is_array() || e.size() != 3) throw FormatError("compose entries are [f, g, fg]");
        c.set_compose(c.arrow_index(str(e[0])), c.arrow_index(str(e[1])), c.arrow_index(str(e[2])));
      }
    return c;
  });
}

json to_json(const FinFunctor& f) {
  return {{"src", to_json(f.src)},
          {"dst", to_json(f.dst)},
          {"objMap", id_map(f.src, f.dst, f.obj_map, false)},
          {"arrMap", id_map(f.src, f.dst, f.arr_map, true)}};
}

FinFunctor functor_from_json(const json& j) {
  return reading("functor", [&] {
    FinFunctor f{category_from_json(field(j, "src")), category_from_json(field(j, "dst")), {}, {}};
    f.obj_map = id_map_from_json(f.src, f.dst, field(j, "objMap"), false);
    f.arr_map = id_map_from_json(f.src, f.dst, field(j, "arrMap"), true);
    return f;
  });
}

json to_json(const FairSetCategory& x) {
  json j = to_json(x.arrows);
  j.erase("identities");
  json units = json::array();
  for (const FairUnit& u : x.units)
    units.push_back({{"id", u.id}, {"object", x.arrows.object_id(u.object)}, {"arrow", x.arrows.arrow_id(u.arrow)}});
  j["units"] = units;
  return j;
}

FairSetCategory fair_set_from_json(const json& j) {
  return reading("fair category", [&] {
    if (j.is_object() && j.contains("identities")) throw FormatError("fair categories carry `units`, not `identities`");
    FairSetCategory x{category_from_json(j), {}};
    for (const json& u : array(field(j, "units")))
      x.units.push_back({str(field(u, "id")), x.arrows.object_index(str(field(u, "object"))),
                         x.arrows.arrow_index(str(field(u, "arrow")))});
    return x;
  });
}

json to_json(const SemiTwoCategory& s) { return semi_two_fields(s); }

SemiTwoCategory semi_two_from_json(const json& j) {
  return reading("semi-2-category", [&] {
    std::vector<std::string> objects;
    for (const json& o : array(field(j, "objects"))) objects.push_back(str(o));
    SemiTwoCategory s(objects);
    for (const json& h : array(field(j, "homs")))
      s.set_hom(s.object_index(str(field(h, "src"))), s.object_index(str(field(h, "tgt"))),
                category_from_json(field(h, "category")));
    for (const json& t : array(field(j, "tensor"))) {
      const std::size_t x = s.object_index(str(field(t, "x")));
      const std::size_t y = s.object_index(str(field(t, "y")));
      const std::size_t z = s.object_index(str(field(t, "z")));
      s.table(x, y, z) = table_from_json(s.hom(x, y), s.hom(y, z), s.hom(x, z), t);
    }
    return s;
  });
}

json to_json(const FairTwoCategory& x) {
  json j = semi_two_fields(x.arrows);
  json units = json::array();
  for (std::size_t o = 0; o < x.units.size(); ++o) {
    const UnitPart& u = x.units[o];
    const FinCategory& hom = x.arrows.hom(o, o);
    units.push_back({{"object", x.arrows.objects()[o]},
                     {"category", to_json(u.category)},
                     {"tensor", table_json(u.category, u.category, u.category, u.tensor)},
                     {"embed",
                      {{"objMap", id_map(u.category, hom, u.embed_objects, false)},
                       {"arrMap", id_map(u.category, hom, u.embed_arrows, true)}}}});
  }
  j["units"] = units;
  return j;
}

FairTwoCategory fair_two_from_json(const json& j) {
  return reading("fair 2-category", [&] {
    FairTwoCategory x{semi_two_from_json(j), {}};
    x.units.resize(x.arrows.object_count());
    std::vector<bool> seen(x.units.size(), false);
    for (const json& uj : array(field(j, "units"))) {
      const std::size_t o = x.arrows.object_index(str(field(uj, "object")));
      if (seen[o]) throw FormatError("duplicate unit part for `" + x.arrows.objects()[o] + "`");
      seen[o] = true;
      UnitPart& u = x.units[o];
      u.category = category_from_json(field(uj, "category"));
      u.tensor = table_from_json(u.category, u.category, u.category, field(uj, "tensor"));
      const json& e = field(uj, "embed");
      u.embed_objects = id_map_from_json(u.category, x.arrows.hom(o, o), field(e, "objMap"), false);
      u.embed_arrows = id_map_from_json(u.category, x.arrows.hom(o, o), field(e, "arrMap"), true);
    }
    for (std::size_t o = 0; o < seen.size(); ++o)
      if (!seen[o]) throw FormatError("missing unit part for `" + x.arrows.objects()[o] + "`");
    return x;
  });
}

json to_json(const SemiTwoCategory& s, const IdentityTriple& t) { return triple_fields(s, t); }

IdentityTriple triple_from_json(const SemiTwoCategory& s, const json& j) {
  return reading("identity triple", [&] {
    const std::size_t n = s.object_count();
    const std::size_t o = s.object_index(str(field(j, "object")));
    IdentityTriple t{o, s.hom(o, o).object_index(str(field(j, "I"))), std::vector<std::vector<std::size_t>>(n),
                     std::vector<std::vector<std::size_t>>(n)};
    for (std::size_t z = 0; z < n; ++z) t.left[z].assign(s.hom(o, z).object_count(), npos);
    for (std::size_t w = 0; w < n; ++w) t.right[w].assign(s.hom(w, o).object_count(), npos);
    for (const json& e : array(field(j, "lambda"))) {
      const std::size_t z = s.object_index(str(field(e, "tgt")));
      const FinCategory& h = s.hom(o, z);
      t.left[z].at(h.object_index(str(field(e, "cell")))) = h.arrow_index(str(field(e, "component")));
    }
    for (const json& e : array(field(j, "rho"))) {
      const std::size_t w = s.object_index(str(field(e, "src")));
      const FinCategory& h = s.hom(w, o);
      t.right[w].at(h.object_index(str(field(e, "cell")))) = h.arrow_index(str(field(e, "component")));
    }
    return t;
  });
}

json to_json(const StrictCompBicategory& c) {
  json j = semi_two_fields(c.cells);
  json units = json::array();
  for (const IdentityTriple& t : c.units) units.push_back(triple_fields(c.cells, t));
  j["units"] = units;
  return j;
}

StrictCompBicategory bicategory_from_json(const json& j) {
  return reading("bicategory", [&] {
    StrictCompBicategory c{semi_two_from_json(j), {}};
    c.units.resize(c.cells.object_count());
    std::vector<bool> seen(c.units.size(), false);
    for (const json& tj : array(field(j, "units"))) {
      IdentityTriple t = triple_from_json(c.cells, tj);
      if (seen[t.object]) throw FormatError("duplicate identity triple for `" + c.cells.objects()[t.object] + "`");
      seen[t.object] = true;
      c.units[t.object] = std::move(t);
    }
    for (std::size_t o = 0; o < seen.size(); ++o)
      if (!seen[o]) throw FormatError("missing identity triple for `" + c.cells.objects()[o] + "`");
    return c;
  });
}

StrictCompBicategory monoidal_from_json(const json& j) {
  return reading("monoidal category", [&] {
    SemiTwoCategory s({"*"});
    s.set_hom(0, 0, category_from_json(field(j, "category")));
    const FinCategory& h = s.hom(0, 0);
    s.table(0, 0, 0) = table_from_json(h, h, h, field(j, "tensor"));
    const json& u = field(j, "unit");
    json lambda = json::array(), rho = json::array();
    for (const json& e : array(field(u, "lambda")))
      lambda.push_back({{"tgt", "*"}, {"cell", field(e, "cell")}, {"component", field(e, "component")}});
    for (const json& e : array(field(u, "rho")))
      rho.push_back({{"src", "*"}, {"cell", field(e, "cell")}, {"component", field(e, "component")}});
    IdentityTriple t =
        triple_from_json(s, {{"object", "*"}, {"I", field(u, "I")}, {"lambda", lambda}, {"rho", rho}});
    return StrictCompBicategory{std::move(s), {std::move(t)}};
  });
}

json to_monoidal_json(const StrictCompBicategory& c) {
  if (c.cells.object_count() != 1 || c.units.size() != 1)
    throw FormatError("a monoidal category is a bicategory with one object");
  const SemiTwoCategory& s = c.cells;
  const FinCategory& h = s.hom(0, 0);
  json tf = triple_fields(s, c.units[0]);
  json lambda = json::array(), rho = json::array();
  for (const json& e : tf["lambda"]) lambda.push_back({{"cell", e["cell"]}, {"component", e["component"]}});
  for (const json& e : tf["rho"]) rho.push_back({{"cell", e["cell"]}, {"component", e["component"]}});
  return {{"category", to_json(h)},
          {"tensor", table_json(h, h, h, s.table(0, 0, 0))},
          {"unit", {{"I", tf["I"]}, {"lambda", lambda}, {"rho", rho}}}};
}

json to_json(const EpiSquare& sq) {
  return {{"top", sq.top.to_string()},
          {"bottom", sq.bottom.to_string()},
          {"srcEpi", sq.src_epi.to_string()},
          {"dstEpi", sq.dst_epi.to_string()}};
}

EpiSquare epi_square_from_json(const json& j) {
  return reading("epi square", [&] {
    return EpiSquare{parse_delta_map(str(field(j, "top"))), parse_delta_map(str(field(j, "bottom"))),
                     parse_delta_map(str(field(j, "srcEpi"))), parse_delta_map(str(field(j, "dstEpi")))};
  });
}

json to_json(const Verdict& v) { return {{"ok", v.ok()}, {"violations", v.violations}}; }

}  // namespace fatdelta::io
