// One PASS/FAIL line per acceptance criterion. Every check is exact; each
// criterion also has a wall-clock budget.
//
//   acceptance [--golden-dir DIR] [--update-golden]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fatdelta/bicat.hpp"
#include "fatdelta/cli.hpp"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/fair_two.hpp"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/fincat.hpp"
#include "fatdelta/generate.hpp"
#include "fatdelta/io.hpp"
#include "oracles.hpp"

using namespace fatdelta;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<ColouredOrdinal> objects_up_to(std::size_t dots) {
  std::vector<ColouredOrdinal> out;
  for (std::size_t d = 1; d <= dots; ++d)
    for (auto& k : all_coloured_ordinals(d)) out.push_back(k);
  return out;
}

// Monos u with e_L . u constant on the fibres of e_K.
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

Outcome counting() {
  Outcome r;
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto got = enum_hom_delta({m}, {n});
      const auto brute = oracle::delta_hom(m, n);
      r.require(got.size() == oracle::binomial(m + n + 1, m + 1) && got.size() == brute.size(),
                "Delta count differs at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  const auto objs = objects_up_to(5);
  for (const auto& k : objs)
    for (const auto& l : objs) {
      const std::size_t fat = enum_hom_fat(k, l).size();
      r.require(fat == squares_by_definition(k, l) && fat == count_epi_squares(k, l),
                "fat count differs for " + k.to_string() + " -> " + l.to_string());
    }
  return r;
}

Outcome pushout() {
  Outcome r;
  r.require(dotsum_delta({1}, {3}).sum == Ordinal{4}, "1 + 3 is not 4");
  gen::Rng rng(0);
  for (int i = 0; i < 200; ++i) {
    const auto k = gen::random_coloured_ordinal(rng, 6);
    const auto l = gen::random_coloured_ordinal(rng, 6);
    const auto lhs = project(dotsum(k, l));
    const auto rhs = dotsum_delta(project(k), project(l)).sum;
    // independent count: components of the concatenated link vector
    auto links = k.links();
    links.insert(links.end(), l.links().begin(), l.links().end());
    const std::size_t comps = oracle::count_distinct(oracle::component_map(links));
    r.require(lhs == rhs && lhs.dots() == comps, "projection of " + k.to_string() + " + " + l.to_string());
  }
  return r;
}

// The step must be id ∔ g ∔ id with g's source starting at `position`.
bool is_flanked_generator(const VerticalStep& s) {
  const FatMap g = generator_map(s.generator);
  const auto& src = s.map.src().links();
  const auto& dst = s.map.dst().links();
  const std::size_t p = s.position, gs = g.src().dots();
  if (p + gs > s.map.src().dots()) return false;
  if (s.map.dst().dots() != s.map.src().dots() + 1) return false;
  for (std::size_t i = 0; i + 1 < gs; ++i)
    if (src[p + i] != g.src().links()[i]) return false;
  std::vector<bool> want(src.begin(), src.begin() + static_cast<long>(p));
  want.insert(want.end(), g.dst().links().begin(), g.dst().links().end());
  want.insert(want.end(), src.begin() + static_cast<long>(p + gs - 1), src.end());
  if (dst != want) return false;
  for (std::size_t i = 0; i < s.map.src().dots(); ++i) {
    std::size_t expect = i;
    if (i >= p + gs)
      expect = i + 1;
    else if (i >= p)
      expect = p + g(i - p);
    if (s.map(i) != expect) return false;
  }
  return true;
}

Outcome vertical_generation() {
  Outcome r;
  const auto objs = objects_up_to(6);
  std::size_t count = 0;
  for (const auto& k : objs)
    for (const auto& l : objs) {
      if (l.dots() < k.dots()) continue;
      for (const auto& f : enum_hom_fat(k, l)) {
        if (!is_vertical(f)) continue;
        ++count;
        FatMap acc = FatMap::identity(k);
        for (const auto& s : vertical_decompose(f)) {
          r.require(is_flanked_generator(s), "step is not a flanked generator in " + f.to_string());
          acc = compose_fat(acc, s.map);
        }
        r.require(acc == f, "composite differs for " + f.to_string());
      }
    }
  r.require(count > 0, "no vertical maps found");
  r.detail = r.ok ? std::to_string(count) + " vertical maps" : r.detail;
  return r;
}

Outcome nerve_round_trip() {
  Outcome r;
  gen::Rng rng(0);
  for (int i = 0; i < 20; ++i) {
    const auto c = gen::random_category(rng);
    oracle::Seq objs(c.object_count()), arrs(c.arrow_count());
    std::iota(objs.begin(), objs.end(), 0);
    std::iota(arrs.begin(), arrs.end(), 0);
    r.require(oracle::is_iso(c, theta(fair_nerve(c)), objs, arrs), "theta(fair_nerve(C)) differs");
  }
  for (int i = 0; i < 20; ++i) {
    const auto x = gen::random_fair_set(rng);
    r.require(validate_fair_set(x).ok(), "generated fair category is invalid");
    const auto y = fair_nerve(theta(x));
    const auto m = fair_unit_comparison(x);
    r.require(is_fair_isomorphism(x, y, m), "unit comparison is not an isomorphism");
    // the comparison is u itself: identity on O and A, each unit to the unit carried by u(w)
    for (std::size_t w = 0; w < x.units.size(); ++w)
      r.require(y.units[m.units[w]].arrow == x.units[w].arrow && y.units[m.units[w]].object == x.units[w].object,
                "unit comparison is not u");
    for (std::size_t a = 0; a < m.arrows.size(); ++a) r.require(m.arrows[a] == a, "comparison moves arrows");
  }
  return r;
}

Outcome weak_identities_strict() {
  Outcome r;
  gen::Rng rng(0);
  std::size_t accepted = 0, rejected = 0;
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::random_fair_set_candidate(rng);
    if (!validate_fair_set(x).ok()) {
      ++rejected;
      continue;
    }
    ++accepted;
    const FinCategory& c = x.arrows;
    for (const auto& w : x.units) {
      r.require(c.src(w.arrow) == c.tgt(w.arrow), "s(u) != t(u)");
      for (std::size_t a = 0; a < c.arrow_count(); ++a) {
        if (c.tgt(a) == w.object) r.require(c.compose(a, w.arrow) == a, "right unit law fails");
        if (c.src(a) == w.object) r.require(c.compose(w.arrow, a) == a, "left unit law fails");
      }
    }
  }
  for (std::size_t carrier = 0; carrier < 2; ++carrier) {
    auto lz = gen::left_zero_semigroup(2);
    lz.units[0].arrow = carrier;
    r.require(!validate_fair_set(lz).ok(), "left-zero semigroup accepted");
  }
  r.require(accepted > 0 && rejected > 0, "corpus is one-sided");
  if (r.ok) r.detail = std::to_string(accepted) + " accepted, " + std::to_string(rejected) + " rejected";
  return r;
}

std::string split_pair(const std::string& id, std::size_t prefix_len) {
  // "<i>.a:b" -> "<i>.a:<i>.b"
  const auto colon = id.find(':');
  return id.substr(0, colon + 1) + id.substr(0, prefix_len) + id.substr(colon + 1);
}

FinFunctor sum_of_functors(const std::vector<FinFunctor>& fs) {
  std::vector<FinCategory> srcs, dsts;
  for (const auto& f : fs) {
    srcs.push_back(f.src);
    dsts.push_back(f.dst);
  }
  const FinCategory a = coproduct(srcs), d = coproduct(dsts);
  std::map<std::string, std::string> om, am;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = std::to_string(i) + ".";
    for (std::size_t x = 0; x < fs[i].src.object_count(); ++x)
      om[p + fs[i].src.object_id(x)] = p + fs[i].dst.object_id(fs[i].obj_map[x]);
    for (std::size_t x = 0; x < fs[i].src.arrow_count(); ++x)
      am[p + fs[i].src.arrow_id(x)] = p + fs[i].dst.arrow_id(fs[i].arr_map[x]);
  }
  return functor_from_ids(a, d, om, am);
}

Outcome discrete_objects() {
  Outcome r;
  gen::Rng rng(0);
  // DO2
  for (int t = 0; t < 100; ++t) {
    const auto a = gen::random_category(rng);
    const auto b = gen::random_category(rng);
    const auto ca = oracle::components(a), cb = oracle::components(b);
    const auto p = binary_product(a, b);
    const auto cp = pi0(p);
    const std::size_t nb = b.object_count();
    r.require(cp.classes.size() == oracle::count_distinct(ca) * oracle::count_distinct(cb), "DO2 count");
    for (std::size_t u = 0; u < p.object_count(); ++u)
      for (std::size_t v = 0; v < p.object_count(); ++v)
        r.require((cp.class_of[u] == cp.class_of[v]) == (ca[u / nb] == ca[v / nb] && cb[u % nb] == cb[v % nb]),
                  "DO2 classes");
  }
  // sums commute with fibre products over discrete objects
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + gen::below(rng, 3);
    std::vector<FinFunctor> fs, gs;
    std::vector<FinCategory> pieces;
    for (std::size_t i = 0; i < k; ++i) {
      const auto a = gen::random_category(rng);
      const auto b = gen::random_category(rng);
      const std::size_t labels = 1 + gen::below(rng, 3);
      auto f = gen::random_functor_to_discrete(rng, a, labels);
      auto g = gen::random_functor_to_discrete(rng, b, labels);
      g.dst = f.dst;
      pieces.push_back(fibre_product_over_discrete(f, g).category);
      fs.push_back(f);
      gs.push_back(g);
    }
    const auto lhs = coproduct(pieces);
    const auto rhs = fibre_product_over_discrete(sum_of_functors(fs), sum_of_functors(gs)).category;
    std::map<std::string, std::string> om, am;
    for (std::size_t x = 0; x < lhs.object_count(); ++x) {
      const auto& id = lhs.object_id(x);
      om[id] = split_pair(id, id.find('.') + 1);
    }
    for (std::size_t x = 0; x < lhs.arrow_count(); ++x) {
      const auto& id = lhs.arrow_id(x);
      am[id] = split_pair(id, id.find('.') + 1);
    }
    r.require(oracle::is_iso_by_ids(lhs, rhs, om, am), "sum of fibre products differs");
  }
  // the Segal condition survives sums
  const auto small = objects_up_to(3);
  for (int t = 0; t < 100; ++t) {
    const auto c1 = gen::random_category(rng, 2, 6);
    const auto c2 = gen::random_category(rng, 2, 6);
    const auto x1 = fair_nerve(c1), x2 = fair_nerve(c2);
    const auto x = fair_nerve(binary_coproduct(c1, c2));
    const auto& k = small[gen::below(rng, small.size())];
    const auto& l = small[gen::below(rng, small.size())];
    const auto kl = dotsum(k, l);
    // |X(K) x_O X(L)| by matching the last dot of K with the first of L
    auto pullback = [&](const FairSetCategory& y) {
      const auto a = evaluate_object(y, k), b = evaluate_object(y, l);
      oracle::Seq last, first;
      for (const auto& s : a) last.push_back(k.dots() == 1 ? s[0] : y.arrows.tgt(s.back()));
      for (const auto& s : b) first.push_back(l.dots() == 1 ? s[0] : y.arrows.src(s.front()));
      return oracle::set_pullback_size(last, first);
    };
    const std::size_t summed = evaluate_object(x1, kl).size() + evaluate_object(x2, kl).size();
    r.require(evaluate_object(x, kl).size() == summed, "X(K+L) is not the sum");
    r.require(summed == pullback(x1) + pullback(x2), "pieces are not pullbacks");
    r.require(pullback(x) == summed, "sum square is not a pullback");
    r.require(segal_map_is_bijective(x, k, l), "Segal map of the sum is not bijective");
  }
  return r;
}

bool contractible_by_hand(const FinCategory& c) {
  if (c.object_count() == 0) return false;
  std::vector<std::size_t> count(c.object_count() * c.object_count(), 0);
  for (std::size_t a = 0; a < c.arrow_count(); ++a) ++count[c.src(a) * c.object_count() + c.tgt(a)];
  for (std::size_t n : count)
    if (n != 1) return false;
  return true;
}

Outcome bicategory_round_trip() {
  Outcome r;
  gen::Rng rng(0);
  const auto corpus = gen::bicategory_corpus(rng, 6);
  r.require(corpus.size() >= 10, "corpus too small");
  r.require(!corpus.empty() && corpus[0] == gen::codiscrete_cyclic(2), "corpus lacks the two-unit example");
  std::size_t multi_unit = 0;
  for (const auto& c : corpus) {
    r.require(validate_bicategory(c).ok(), "corpus entry invalid");
    const auto x = bicat_to_fair2(c);
    r.require(validate_fair_two(x).ok(), "bicat_to_fair2 output is not fair");
    for (std::size_t o = 0; o < c.cells.object_count(); ++o) {
      const auto ic = identity_category(c, o);
      r.require(contractible_by_hand(ic.category), "identity category not contractible");
      if (ic.category.object_count() > 1) ++multi_unit;
    }
    for (auto choice : {UnitChoice::first, UnitChoice::last}) {
      const auto back = fair2_to_bicat(x, choice);
      r.require(back.cells == c.cells, "homs or tensor changed");
      r.require(validate_bicategory(back).ok(), "recovered bicategory invalid");
      for (std::size_t o = 0; o < c.cells.object_count(); ++o) {
        const auto theta = canonical_unit_iso(c.cells, c.units[o], back.units[o]);
        r.require(is_triple_morphism(c.cells, theta, back.units[o], c.units[o]), "units not connected");
        const auto& h = c.cells.hom(o, o);
        r.require(h.inverse(theta).has_value(), "connecting cell not invertible");
      }
    }
  }
  r.require(multi_unit > 0, "no bicategory with several weak units");
  if (r.ok) r.detail = std::to_string(corpus.size()) + " bicategories";
  return r;
}

// ---------------------------------------------------------------------------
// CLI golden files

struct Case {
  std::string name;
  std::vector<std::string> args;
  std::string stdin_file;
};

std::string run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return "exit " + std::to_string(code) + "\n--- stdout\n" + out.str() + "--- stderr\n" + err.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

// Input documents, all derived from seed 0 or fixed constructions.
void write_inputs(const fs::path& dir) {
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const io::json& j) {
    std::ofstream(dir / name, std::ios::binary) << io::emit(j) << '\n';
  };
  gen::Rng rng(0);
  const FinCategory cat = gen::random_category(rng);
  put("cat.json", io::to_json(cat));
  put("ordinal1.json", io::to_json(ordinal_category(1)));
  const FinFunctor f = gen::random_functor_to_discrete(rng, cat, 2);
  // the connected ordinal lands on the label of the first object
  FinFunctor g{ordinal_category(1), f.dst, {f.obj_map[0], f.obj_map[0]}, std::vector<std::size_t>(3, f.arr_map[cat.identity(0)])};
  put("functor_left.json", io::to_json(f));
  put("functor_right.json", io::to_json(g));
  put("fair.json", io::to_json(gen::random_fair_set(rng)));
  put("left_zero.json", io::to_json(gen::left_zero_semigroup(2)));
  const auto two_units = gen::codiscrete_cyclic(2);
  put("two_units.json", io::to_json(two_units));
  put("two_units_monoidal.json", io::to_monoidal_json(two_units));
  put("two_units_fair2.json", io::to_json(bicat_to_fair2(two_units)));
  auto tampered = gen::two_group(3);
  tampered.units[0].left[0][0] = 1;
  put("tampered.json", io::to_json(tampered));
  put("episquare.json", io::to_json(to_epi_square(FatMap::parse("o.o -> o-o.o : [0,2]"))));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Manifest lines: name<TAB>arg<TAB>arg...; `$IN/` expands to the input
// directory and an argument `<file` feeds that input file on stdin.
std::vector<Case> read_manifest(const fs::path& path, const fs::path& inputs) {
  std::vector<Case> out;
  std::istringstream lines(slurp(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto parts = split_tabs(line);
    Case c{parts[0], {}, {}};
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::string a = replace_all(parts[i], "$IN/", inputs.string() + "/");
      if (!a.empty() && a[0] == '<')
        c.stdin_file = a.substr(1);
      else
        c.args.push_back(a);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Outcome golden(const fs::path& dir, bool update) {
  Outcome r;
  const fs::path inputs = fs::temp_directory_path() / "fatdelta_golden_inputs";
  write_inputs(inputs);
  const auto cases = read_manifest(dir / "cases.txt", inputs);
  r.require(!cases.empty(), "empty manifest");
  std::size_t written = 0;
  for (const auto& c : cases) {
    const std::string input = c.stdin_file.empty() ? std::string() : slurp(c.stdin_file);
    const std::string first = replace_all(run_cli(c.args, input), inputs.string() + "/", "$IN/");
    const std::string second = replace_all(run_cli(c.args, input), inputs.string() + "/", "$IN/");
    r.require(first == second, c.name + ": output differs between runs");
    const fs::path expected = dir / (c.name + ".out");
    if (update) {
      std::ofstream(expected, std::ios::binary) << first;
      ++written;
      continue;
    }
    if (!fs::exists(expected)) {
      r.fail(c.name + ": no golden file");
      continue;
    }
    r.require(slurp(expected) == first, c.name + ": output differs from golden file");
  }
  if (r.ok) r.detail = std::to_string(cases.size()) + " cases" + (update ? ", golden files rewritten" : "");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path golden_dir = FATDELTA_GOLDEN_DIR;
  bool update = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--update-golden") {
      update = true;
    } else if (a == "--golden-dir" && i + 1 < argc) {
      golden_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--golden-dir DIR] [--update-golden]\n";
      return 2;
    }
  }

  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"counting oracle", 10, counting},
      {"pushout law", 5, pushout},
      {"vertical generation", 30, vertical_generation},
      {"fair nerve round trip", 10, nerve_round_trip},
      {"weak identities are strict endomorphisms", 5, weak_identities_strict},
      {"discrete-object suite", 20, discrete_objects},
      {"bicategory round trip", 60, bicategory_round_trip},
      {"CLI golden files", 10, [&] { return golden(golden_dir, update); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.budget_seconds) o.fail("over the time budget");
    if (!o.ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget_seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << timing << ")"
              << (o.detail.empty() ? "" : ": " + o.detail) << '\n';
  }
  return failures == 0 ? 0 : 1;
}
