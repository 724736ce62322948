#include "fatdelta/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fatdelta/bicat.hpp"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/fair_two.hpp"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/fincat.hpp"
#include "fatdelta/generate.hpp"
#include "fatdelta/io.hpp"
#include "fatdelta/limits.hpp"
#include "fatdelta/ordinal.hpp"

namespace fatdelta::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parsing(const std::string& what, const std::string& text, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError("cannot parse " + what + " `" + text + "`: " + e.what());
  }
}

ColouredOrdinal parse_object(const std::string& t) {
  return parsing("coloured ordinal", t, [&] { return ColouredOrdinal::parse(t); });
}
FatMap parse_fat(const std::string& t) {
  return parsing("fat map", t, [&] { return FatMap::parse(t); });
}
DeltaMap parse_delta(const std::string& t) {
  return parsing("delta map", t, [&] { return parse_delta_map(t); });
}
Ordinal parse_ordinal(const std::string& t) {
  if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("cannot parse ordinal `" + t + "`");
  return Ordinal{static_cast<std::size_t>(std::stoul(t))};
}

json dots_json(const Ordinal& o) { return o.n; }

template <typename Map>
json map_list(const std::vector<Map>& maps) {
  json list = json::array();
  for (const auto& m : maps) list.push_back(m.to_string());
  return {{"count", maps.size()}, {"maps", list}};
}

std::string generator_name(Generator g) { return "g" + std::to_string(static_cast<int>(g)); }

json quotient_json(const FinCategory& c, const ObjectQuotient& q) {
  json class_of = json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) class_of[c.object_id(x)] = q.class_of[x];
  return {{"classes", q.classes}, {"classOf", class_of}};
}

json fair_verdict_json(const FairSetVerdict& v) {
  json j = io::to_json(v.verdict);
  j["isFairMonoid"] = v.is_fair_monoid;
  j["unitsAreEndo"] = v.units_are_endo;
  j["unitsStrict"] = v.units_strict;
  return j;
}

void check_category_size(const SizeLimits& limits, const FinCategory& c, const std::string& what) {
  check_arrows(limits, c.arrow_count(), what);
}

void check_semi_two_size(const SizeLimits& limits, const SemiTwoCategory& s) {
  for (std::size_t x = 0; x < s.object_count(); ++x)
    for (std::size_t y = 0; y < s.object_count(); ++y)
      check_category_size(limits, s.hom(x, y), "Hom(" + s.objects()[x] + "," + s.objects()[y] + ")");
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot read `" + path + "`");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    return io::parse_json(text);
  }

  void emit(const json& j) { out_ << io::emit(j) << '\n'; }

  // Prints the verdict's violations to err and the document to out.
  int report(const json& doc, const std::vector<std::string>& violations) {
    emit(doc);
    for (const auto& v : violations) err_ << "violation: " << v << '\n';
    return violations.empty() ? kOk : kFailed;
  }

  FinCategory read_category(const std::string& path) {
    FinCategory c = io::category_from_json(read_document(path));
    check_category_size(limits_, c, "input category");
    return c;
  }
  StrictCompBicategory read_bicategory(const std::string& path, bool monoidal) {
    const json j = read_document(path);
    StrictCompBicategory c = monoidal ? io::monoidal_from_json(j) : io::bicategory_from_json(j);
    check_semi_two_size(limits_, c.cells);
    return c;
  }
  json bicategory_json(const StrictCompBicategory& c, bool monoidal) {
    return monoidal ? io::to_monoidal_json(c) : io::to_json(c);
  }

  void build(CLI::App& app);
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    leaves_.emplace_back(sub, std::move(fn));
    return sub;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  SizeLimits limits_;
  std::vector<std::pair<CLI::App*, std::function<int()>>> leaves_;

  // option storage
  std::string a_, b_, file_, file2_;
  bool fat_ = false, tmap_ = false, delta_ = false, maps_ = false, inverse_ = false, monoidal_ = false,
       last_ = false;
  std::size_t levels_ = 2, seed_ = 0;
  std::string object_, hom_from_, hom_to_, unit_of_;
};

void Runner::build(CLI::App& app) {
  app.require_subcommand(1);

  {
    auto* s = leaf(&app, "enum-hom", "Enumerate a hom-set", [this] {
      if (delta_) {
        const Ordinal m = parse_ordinal(a_), n = parse_ordinal(b_);
        check_dots(limits_, m.dots(), "source");
        check_dots(limits_, n.dots(), "target");
        emit(map_list(enum_hom_delta(m, n)));
        return kOk;
      }
      const ColouredOrdinal k = parse_object(a_), l = parse_object(b_);
      check_dots(limits_, k.dots(), "source");
      check_dots(limits_, l.dots(), "target");
      if (tmap_)
        emit(map_list(enum_hom_t(k, l)));
      else
        emit(map_list(enum_hom_fat(k, l)));
      return kOk;
    });
    auto* g = s->add_option_group("kind");
    g->add_flag("--fat", fat_, "Fat delta maps (default)");
    g->add_flag("--tmap", tmap_, "All maps of coloured ordinals");
    g->add_flag("--delta", delta_, "Monotone maps of ordinals; arguments are ordinals n");
    g->require_option(0, 1);
    s->add_option("source", a_)->required();
    s->add_option("target", b_)->required();
  }
  {
    auto* s = leaf(&app, "compose", "Compose two maps, first then second", [this] {
      if (delta_) {
        emit({{"map", compose_delta(parse_delta(a_), parse_delta(b_)).to_string()}});
        return kOk;
      }
      emit({{"map", compose_fat(parse_fat(a_), parse_fat(b_)).to_string()}});
      return kOk;
    });
    s->add_flag("--delta", delta_, "Maps of the simplex category");
    s->add_option("first", a_)->required();
    s->add_option("second", b_)->required();
  }
  {
    auto* s = leaf(&app, "factor", "Epi-mono factorization of a delta map", [this] {
      const auto f = epi_mono_factor(parse_delta(a_));
      emit({{"epi", f.epi.to_string()},
            {"mono", f.mono.to_string()},
            {"isEpi", f.input_is_epi},
            {"isMono", f.input_is_mono}});
      return kOk;
    });
    s->add_option("map", a_)->required();
  }
  {
    auto* s = leaf(&app, "dotsum", "Dot sum of objects or maps", [this] {
      if (delta_) {
        const auto d = dotsum_delta(parse_ordinal(a_), parse_ordinal(b_));
        emit({{"sum", dots_json(d.sum)}, {"left", d.left.to_string()}, {"right", d.right.to_string()}});
      } else if (maps_) {
        emit({{"map", dotsum_maps(parse_fat(a_), parse_fat(b_)).to_string()}});
      } else {
        emit({{"result", dotsum(parse_object(a_), parse_object(b_)).to_string()}});
      }
      return kOk;
    });
    auto* g = s->add_option_group("kind");
    g->add_flag("--delta", delta_, "Arguments are ordinals n");
    g->add_flag("--maps", maps_, "Arguments are fat maps");
    g->require_option(0, 1);
    s->add_option("left", a_)->required();
    s->add_option("right", b_)->required();
  }
  {
    auto* s = leaf(&app, "project", "Projection to the simplex category", [this] {
      if (a_.find("->") != std::string::npos) {
        const FatMap f = parse_fat(a_);
        emit({{"map", project_map(f).to_string()}, {"vertical", is_vertical(f)}});
      } else {
        emit({{"ordinal", dots_json(project(parse_object(a_)))}});
      }
      return kOk;
    });
    s->add_option("input", a_, "Coloured ordinal or fat map")->required();
  }
  {
    auto* v = app.add_subcommand("vertical", "Vertical arrows");
    v->require_subcommand(1);
    auto* c = leaf(v, "check", "Whether a fat map is vertical", [this] {
      const FatMap f = parse_fat(a_);
      const bool vert = is_vertical(f);
      emit({{"vertical", vert}, {"projection", project_map(f).to_string()}});
      return vert ? kOk : kFailed;
    });
    c->add_option("map", a_)->required();
    auto* d = leaf(v, "decompose", "Decompose a vertical map into elementary steps", [this] {
      const FatMap f = parse_fat(a_);
      check_dots(limits_, f.dst().dots(), "target");
      if (!is_vertical(f)) {
        emit({{"vertical", false}, {"steps", json::array()}});
        err_ << "violation: " << f.to_string() << " is not vertical\n";
        return kFailed;
      }
      json steps = json::array();
      for (const auto& st : vertical_decompose(f))
        steps.push_back({{"generator", generator_name(st.generator)},
                         {"position", st.position},
                         {"map", st.map.to_string()}});
      emit({{"vertical", true}, {"steps", steps}});
      return kOk;
    });
    d->add_option("map", a_)->required();
    leaf(v, "generators", "List the five generators", [this] {
      json list = json::array();
      for (int i = 1; i <= 5; ++i) {
        const auto g = static_cast<Generator>(i);
        list.push_back({{"name", generator_name(g)}, {"map", generator_map(g).to_string()}});
      }
      emit({{"generators", list}});
      return kOk;
    });
  }
  {
    auto* s = leaf(&app, "episquare", "Convert between fat maps and epi squares", [this] {
      if (inverse_) {
        const EpiSquare sq = io::epi_square_from_json(read_document(a_));
        const auto problems = check_epi_square(sq);
        if (!problems.empty()) return report({{"ok", false}, {"violations", problems}}, problems);
        emit({{"map", from_epi_square(sq).to_string()}});
        return kOk;
      }
      if (a_.find("->") == std::string::npos) {
        emit({{"epi", to_epi(parse_object(a_)).to_string()}});
        return kOk;
      }
      emit(io::to_json(to_epi_square(parse_fat(a_))));
      return kOk;
    });
    s->add_flag("--inverse", inverse_, "Read an epi-square document and print the fat map");
    s->add_option("input", a_, "Coloured ordinal, fat map, or document path with --inverse")->required();
  }
  {
    auto* c = app.add_subcommand("cat", "Finite categories");
    c->require_subcommand(1);
    leaf(c, "validate", "Check the category laws", [this] {
      const Verdict v = validate(read_category(file_));
      return report(io::to_json(v), v.violations);
    })->add_option("file", file_)->required();
    leaf(c, "pi0", "Connected components", [this] {
      const FinCategory cat = read_category(file_);
      emit(quotient_json(cat, pi0(cat)));
      return kOk;
    })->add_option("file", file_)->required();
    leaf(c, "tau0", "Isomorphism classes with the comparison to components", [this] {
      const FinCategory cat = read_category(file_);
      const Truncation t = tau0(cat);
      json j = quotient_json(cat, t.classes);
      j["toComponents"] = t.to_components;
      emit(j);
      return kOk;
    })->add_option("file", file_)->required();
    auto* p = leaf(c, "product", "Binary product", [this] {
      emit(io::to_json(binary_product(read_category(file_), read_category(file2_))));
      return kOk;
    });
    p->add_option("left", file_)->required();
    p->add_option("right", file2_)->required();
    auto* q = leaf(c, "coproduct", "Binary coproduct", [this] {
      emit(io::to_json(binary_coproduct(read_category(file_), read_category(file2_))));
      return kOk;
    });
    q->add_option("left", file_)->required();
    q->add_option("right", file2_)->required();
    auto* f = leaf(c, "fibre", "Fibre product of two functors into a discrete category", [this] {
      const FinFunctor l = io::functor_from_json(read_document(file_));
      const FinFunctor r = io::functor_from_json(read_document(file2_));
      const FibreProduct fp = fibre_product_over_discrete(l, r);
      emit({{"category", io::to_json(fp.category)},
            {"left", io::to_json(fp.left)["objMap"]},
            {"right", io::to_json(fp.right)["objMap"]}});
      return kOk;
    });
    f->add_option("left", file_, "Functor document")->required();
    f->add_option("right", file2_, "Functor document")->required();
  }
  {
    auto* c = app.add_subcommand("functor", "Finite functors");
    c->require_subcommand(1);
    leaf(c, "report", "Validity and equimorphism report", [this] {
      const FinFunctor f = io::functor_from_json(read_document(file_));
      const Verdict v = validate(f);
      json j = io::to_json(v);
      if (v.ok()) {
        const EquimorphismReport r = equimorphism_report(f);
        j["fullyFaithful"] = r.fully_faithful;
        j["essentiallySurjective"] = r.essentially_surjective;
        j["equimorphism"] = r.equimorphism;
      }
      return report(j, v.violations);
    })->add_option("file", file_)->required();
  }
  {
    auto* c = app.add_subcommand("fair", "Fair categories in Set");
    c->require_subcommand(1);
    leaf(c, "validate", "Check the fair category axioms", [this] {
      const FairSetVerdict v = validate_fair_set(io::fair_set_from_json(read_document(file_)));
      return report(fair_verdict_json(v), v.verdict.violations);
    })->add_option("file", file_)->required();
    leaf(c, "to-cat", "The underlying category", [this] {
      emit(io::to_json(theta(io::fair_set_from_json(read_document(file_)))));
      return kOk;
    })->add_option("file", file_)->required();
    leaf(c, "from-cat", "The fair nerve of a category", [this] {
      emit(io::to_json(fair_nerve(read_category(file_))));
      return kOk;
    })->add_option("file", file_)->required();
    auto* e = leaf(c, "eval", "Evaluate at a coloured ordinal or along a fat map", [this] {
      const FairSetCategory x = io::fair_set_from_json(read_document(file_));
      if (const FairSetVerdict v = validate_fair_set(x); !v.ok())
        return report(fair_verdict_json(v), v.verdict.violations);
      auto simplex_json = [&](const FairSimplex& s, std::size_t dots) {
        json out = json::array();
        for (std::size_t i : s) out.push_back(dots == 1 ? x.arrows.object_id(i) : x.arrows.arrow_id(i));
        return out;
      };
      if (a_.find("->") != std::string::npos) {
        const FatMap phi = parse_fat(a_);
        check_dots(limits_, phi.dst().dots(), "target");
        const EvaluatedMap m = evaluate_map(x, phi);
        json table = json::array();
        for (std::size_t i = 0; i < m.domain.size(); ++i)
          table.push_back({simplex_json(m.domain[i], phi.dst().dots()),
                           simplex_json(m.codomain[m.table[i]], phi.src().dots())});
        emit({{"map", phi.to_string()}, {"table", table}, {"bijective", m.is_bijective()}});
        return kOk;
      }
      const ColouredOrdinal k = parse_object(a_);
      check_dots(limits_, k.dots(), "object");
      json elements = json::array();
      for (const auto& s : evaluate_object(x, k)) elements.push_back(simplex_json(s, k.dots()));
      emit({{"object", k.to_string()}, {"count", elements.size()}, {"elements", elements}});
      return kOk;
    });
    e->add_option("file", file_)->required();
    e->add_option("at", a_, "Coloured ordinal or fat map")->required();
    auto* n = leaf(c, "nerve-check", "Compare with the classical nerve of the underlying category", [this] {
      check_dots(limits_, levels_ + 1, "nerve level");
      const NerveCheck r = underlying_nerve_check(io::fair_set_from_json(read_document(file_)), levels_);
      return report({{"ok", r.ok}, {"levelSizes", r.level_sizes}, {"failures", r.failures}}, r.failures);
    });
    n->add_option("file", file_)->required();
    n->add_option("--levels", levels_, "Highest nerve level")->capture_default_str();
  }
  {
    auto* c = app.add_subcommand("fair2", "Fair categories in Cat");
    c->require_subcommand(1);
    leaf(c, "validate", "Check the fair 2-category axioms", [this] {
      const FairTwoCategory x = io::fair_two_from_json(read_document(file_));
      check_semi_two_size(limits_, x.arrows);
      const FairTwoVerdict v = validate_fair_two(x);
      json j = io::to_json(v.verdict);
      j["isFairMonoidal"] = v.is_fair_monoidal;
      return report(j, v.verdict.violations);
    })->add_option("file", file_)->required();
    auto* s = leaf(c, "slice", "A hom category or unit category", [this] {
      const FairTwoCategory x = io::fair_two_from_json(read_document(file_));
      try {
        if (!unit_of_.empty())
          emit(io::to_json(slice(x, SliceKind::unit, unit_of_)));
        else
          emit(io::to_json(slice(x, SliceKind::hom, hom_from_, hom_to_)));
      } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
      }
      return kOk;
    });
    s->add_option("file", file_)->required();
    auto* g = s->add_option_group("which");
    g->add_option("--unit", unit_of_, "Unit category U(x)");
    auto* hf = g->add_option("--hom", hom_from_, "Hom category A(x,y): source x");
    s->add_option("--to", hom_to_, "Target y of --hom")->needs(hf);
    g->require_option(1);
  }
  {
    auto* c = app.add_subcommand("bicat", "Bicategories with strict composition");
    c->require_subcommand(1);
    auto* v = leaf(c, "validate", "Check the bicategory axioms", [this] {
      const Verdict v = validate_bicategory(read_bicategory(file_, monoidal_));
      return report(io::to_json(v), v.violations);
    });
    v->add_option("file", file_)->required();
    v->add_flag("--monoidal", monoidal_, "Input is a monoidal category document");
    auto* i = leaf(c, "id-cat", "The category of identity triples at an object", [this] {
      const StrictCompBicategory b = read_bicategory(file_, monoidal_);
      if (const Verdict v = validate_bicategory(b); !v.ok()) return report(io::to_json(v), v.violations);
      const std::size_t o = object_.empty() ? 0 : parsing("object", object_, [&] {
        try {
          return b.cells.object_index(object_);
        } catch (const std::out_of_range& e) {
          throw std::invalid_argument(e.what());
        }
      });
      const IdentityCategory ic = identity_category(b, o);
      json triples = json::array();
      for (const auto& t : ic.triples) triples.push_back(io::to_json(b.cells, t));
      emit({{"category", io::to_json(ic.category)}, {"contractible", ic.contractible}, {"triples", triples}});
      return ic.contractible ? kOk : kFailed;
    });
    i->add_option("file", file_)->required();
    i->add_option("--object", object_, "Object (default: the first)");
    i->add_flag("--monoidal", monoidal_, "Input is a monoidal category document");
    auto* t = leaf(c, "to-fair2", "The associated fair 2-category", [this] {
      emit(io::to_json(bicat_to_fair2(read_bicategory(file_, monoidal_))));
      return kOk;
    });
    t->add_option("file", file_)->required();
    t->add_flag("--monoidal", monoidal_, "Input is a monoidal category document");
    auto* f = leaf(c, "from-fair2", "Recover a bicategory from a fair 2-category", [this] {
      const FairTwoCategory x = io::fair_two_from_json(read_document(file_));
      check_semi_two_size(limits_, x.arrows);
      emit(bicategory_json(fair2_to_bicat(x, last_ ? UnitChoice::last : UnitChoice::first), monoidal_));
      return kOk;
    });
    f->add_option("file", file_)->required();
    f->add_flag("--last", last_, "Choose the last weak identity instead of the first");
    f->add_flag("--monoidal", monoidal_, "Emit a monoidal category document");
  }
  {
    auto* c = app.add_subcommand("gen", "Random instances");
    c->require_subcommand(1);
    auto add_seed = [this](CLI::App* s) {
      s->add_option("--seed", seed_, "Random seed")->capture_default_str();
      return s;
    };
    add_seed(leaf(c, "cat", "A random finite category", [this] {
      gen::Rng rng(seed_);
      emit(io::to_json(gen::random_category(rng)));
      return kOk;
    }));
    add_seed(leaf(c, "fair", "A random fair Set-category", [this] {
      gen::Rng rng(seed_);
      emit(io::to_json(gen::random_fair_set(rng)));
      return kOk;
    }));
    add_seed(leaf(c, "bicat", "A random bicategory with strict composition", [this] {
      gen::Rng rng(seed_);
      emit(io::to_json(gen::bicategory_corpus(rng, 1).back()));
      return kOk;
    }));
    add_seed(leaf(c, "fair2", "A random fair 2-category", [this] {
      gen::Rng rng(seed_);
      emit(io::to_json(bicat_to_fair2(gen::bicategory_corpus(rng, 1).back())));
      return kOk;
    }));
  }
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Fat delta, fair categories and bicategories", "fatdelta"};
  build(app);
  try {
    limits_ = size_limits_from_env();
  } catch (const std::invalid_argument& e) {
    err_ << "error: FATDELTA_MAX_SIZE: " << e.what() << '\n';
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }
  for (auto& [sub, fn] : leaves_) {
    if (!sub->parsed()) continue;
    try {
      return fn();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const io::FormatError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kFailed;
    }
  }
  err_ << "error: no command given\n";
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner r(in, out, err);
  return r.run(args);
}

}  // namespace fatdelta::cli
