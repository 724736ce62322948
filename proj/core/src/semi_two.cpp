#include "fatdelta/semi_two.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatdelta {

SemiTwoCategory::SemiTwoCategory(std::vector<std::string> objects) : objects_(std::move(objects)) {
  const std::size_t n = objects_.size();
  homs_.resize(n * n);
  tables_.resize(n * n * n);
}

std::size_t SemiTwoCategory::object_index(const std::string& id) const {
  auto it = std::find(objects_.begin(), objects_.end(), id);
  if (it == objects_.end()) throw std::out_of_range("unknown object `" + id + "`");
  return static_cast<std::size_t>(it - objects_.begin());
}

void SemiTwoCategory::set_hom(std::size_t x, std::size_t y, FinCategory c) {
  homs_.at(x * object_count() + y) = std::move(c);
  reset_tables();
}

void SemiTwoCategory::reset_tables() {
  const std::size_t n = object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        TensorTable& t = tables_[triple(x, y, z)];
        const std::size_t cells = hom(x, y).object_count() * hom(y, z).object_count();
        const std::size_t two = hom(x, y).arrow_count() * hom(y, z).arrow_count();
        if (t.cells.size() != cells) t.cells.assign(cells, npos);
        if (t.two_cells.size() != two) t.two_cells.assign(two, npos);
      }
}

const TensorTable& SemiTwoCategory::table(std::size_t x, std::size_t y, std::size_t z) const {
  return tables_.at(triple(x, y, z));
}

TensorTable& SemiTwoCategory::table(std::size_t x, std::size_t y, std::size_t z) { return tables_.at(triple(x, y, z)); }

std::size_t SemiTwoCategory::tensor(std::size_t x, std::size_t y, std::size_t z, std::size_t a, std::size_t b) const {
  return table(x, y, z).cells.at(a * hom(y, z).object_count() + b);
}

std::size_t SemiTwoCategory::tensor2(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha,
                                     std::size_t beta) const {
  return table(x, y, z).two_cells.at(alpha * hom(y, z).arrow_count() + beta);
}

void SemiTwoCategory::set_tensor(std::size_t x, std::size_t y, std::size_t z, std::size_t a, std::size_t b,
                                 std::size_t ab) {
  table(x, y, z).cells.at(a * hom(y, z).object_count() + b) = ab;
}

void SemiTwoCategory::set_tensor2(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha, std::size_t beta,
                                  std::size_t ab) {
  table(x, y, z).two_cells.at(alpha * hom(y, z).arrow_count() + beta) = ab;
}

std::size_t SemiTwoCategory::whisker_right(std::size_t x, std::size_t y, std::size_t z, std::size_t alpha,
                                           std::size_t b) const {
  return tensor2(x, y, z, alpha, id2(y, z, b));
}

std::size_t SemiTwoCategory::whisker_left(std::size_t x, std::size_t y, std::size_t z, std::size_t a,
                                          std::size_t beta) const {
  return tensor2(x, y, z, id2(x, y, a), beta);
}

Verdict validate_semi_two(const SemiTwoCategory& s) {
  Verdict v;
  const std::size_t n = s.object_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      v.merge(validate(s.hom(x, y)), "Hom(" + s.objects()[x] + "," + s.objects()[y] + "): ");
  if (!v.ok()) return v;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const FinCategory& l = s.hom(x, y);
        const FinCategory& r = s.hom(y, z);
        const FinCategory& out = s.hom(x, z);
        const std::string where = "tensor(" + s.objects()[x] + "," + s.objects()[y] + "," + s.objects()[z] + "): ";
        const TensorTable& t = s.table(x, y, z);
        if (t.cells.size() != l.object_count() * r.object_count() ||
            t.two_cells.size() != l.arrow_count() * r.arrow_count()) {
          v.add(where + "table has the wrong shape");
          continue;
        }
        bool total = true;
        for (std::size_t c : t.cells)
          if (c >= out.object_count()) total = false;
        for (std::size_t c : t.two_cells)
          if (c >= out.arrow_count()) total = false;
        if (!total) {
          v.add(where + "table is not total");
          continue;
        }
        for (std::size_t a = 0; a < l.arrow_count(); ++a)
          for (std::size_t b = 0; b < r.arrow_count(); ++b) {
            const std::size_t ab = s.tensor2(x, y, z, a, b);
            if (out.src(ab) != s.tensor(x, y, z, l.src(a), r.src(b)) ||
                out.tgt(ab) != s.tensor(x, y, z, l.tgt(a), r.tgt(b)))
              v.add(where + "endpoints of " + l.arrow_id(a) + " (x) " + r.arrow_id(b) + " are wrong");
          }
        for (std::size_t a = 0; a < l.object_count(); ++a)
          for (std::size_t b = 0; b < r.object_count(); ++b)
            if (s.tensor2(x, y, z, l.identity(a), r.identity(b)) != out.identity(s.tensor(x, y, z, a, b)))
              v.add(where + "identity 2-cells of " + l.object_id(a) + ", " + r.object_id(b) + " not preserved");
        // interchange law
        for (std::size_t a = 0; a < l.arrow_count(); ++a)
          for (std::size_t a2 = 0; a2 < l.arrow_count(); ++a2) {
            const std::size_t aa = l.compose(a, a2);
            if (aa == npos) continue;
            for (std::size_t b = 0; b < r.arrow_count(); ++b)
              for (std::size_t b2 = 0; b2 < r.arrow_count(); ++b2) {
                const std::size_t bb = r.compose(b, b2);
                if (bb == npos) continue;
                if (s.tensor2(x, y, z, aa, bb) != out.compose(s.tensor2(x, y, z, a, b), s.tensor2(x, y, z, a2, b2)))
                  v.add(where + "interchange fails for (" + l.arrow_id(a) + ";" + l.arrow_id(a2) + ") (x) (" +
                        r.arrow_id(b) + ";" + r.arrow_id(b2) + ")");
              }
          }
      }
  if (!v.ok()) return v;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const FinCategory& h1 = s.hom(x, y);
          const FinCategory& h2 = s.hom(y, z);
          const FinCategory& h3 = s.hom(z, w);
          for (std::size_t a = 0; a < h1.object_count(); ++a)
            for (std::size_t b = 0; b < h2.object_count(); ++b)
              for (std::size_t c = 0; c < h3.object_count(); ++c)
                if (s.tensor(x, z, w, s.tensor(x, y, z, a, b), c) != s.tensor(x, y, w, a, s.tensor(y, z, w, b, c)))
                  v.add("associativity fails on 1-cells (" + h1.object_id(a) + ", " + h2.object_id(b) + ", " +
                        h3.object_id(c) + ")");
          for (std::size_t a = 0; a < h1.arrow_count(); ++a)
            for (std::size_t b = 0; b < h2.arrow_count(); ++b)
              for (std::size_t c = 0; c < h3.arrow_count(); ++c)
                if (s.tensor2(x, z, w, s.tensor2(x, y, z, a, b), c) != s.tensor2(x, y, w, a, s.tensor2(y, z, w, b, c)))
                  v.add("associativity fails on 2-cells (" + h1.arrow_id(a) + ", " + h2.arrow_id(b) + ", " +
                        h3.arrow_id(c) + ")");
        }
  return v;
}

FinFunctor tensor_functor(const SemiTwoCategory& s, std::size_t x, std::size_t y, std::size_t z) {
  return functor_from_product(
      s.hom(x, y), s.hom(y, z), s.hom(x, z), [&](std::size_t a, std::size_t b) { return s.tensor(x, y, z, a, b); },
      [&](std::size_t a, std::size_t b) { return s.tensor2(x, y, z, a, b); });
}

}  // namespace fatdelta
