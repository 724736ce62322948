#include "fatdelta/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "text.hpp"

namespace fatdelta {

namespace detail {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

MapText split_map_text(const std::string& text) {
  const std::string s = strip_spaces(text);
  const auto arrow = s.find("->");
  const auto colon = s.find(':');
  if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
    throw std::invalid_argument("map literal must look like `SRC -> DST : [..]`: " + text);
  MapText out;
  out.src = s.substr(0, arrow);
  out.dst = s.substr(arrow + 2, colon - arrow - 2);
  std::string list = s.substr(colon + 1);
  if (list.size() < 2 || list.front() != '[' || list.back() != ']')
    throw std::invalid_argument("image list must be bracketed: " + text);
  list = list.substr(1, list.size() - 2);
  std::size_t pos = 0;
  while (pos < list.size()) {
    auto comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    const std::string tok = list.substr(pos, comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad image index `" + tok + "` in " + text);
    out.images.push_back(std::stoul(tok));
    pos = comma + 1;
    if (comma + 1 == list.size()) throw std::invalid_argument("trailing comma in " + text);
  }
  if (out.src.empty() || out.dst.empty()) throw std::invalid_argument("missing endpoint in " + text);
  return out;
}

std::string images_to_string(const std::vector<std::size_t>& images) {
  std::string out = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images[i]);
  }
  out += ']';
  return out;
}

}  // namespace detail

DeltaMap::DeltaMap(Ordinal src, Ordinal dst, std::vector<std::size_t> images)
    : src_(src), dst_(dst), images_(std::move(images)) {
  if (images_.size() != src_.dots())
    throw std::invalid_argument("DeltaMap: expected " + std::to_string(src_.dots()) + " images, got " +
                                std::to_string(images_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] > dst_.n) throw std::invalid_argument("DeltaMap: image out of range");
    if (i > 0 && images_[i - 1] > images_[i]) throw std::invalid_argument("DeltaMap: not monotone");
  }
}

DeltaMap DeltaMap::identity(Ordinal k) {
  std::vector<std::size_t> images(k.dots());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return {k, k, std::move(images)};
}

bool DeltaMap::is_identity() const { return src_ == dst_ && *this == identity(src_); }

bool DeltaMap::is_epi() const {
  // monotone maps are surjective iff they start at 0, end at n and never jump
  if (images_.front() != 0 || images_.back() != dst_.n) return false;
  for (std::size_t i = 1; i < images_.size(); ++i)
    if (images_[i] - images_[i - 1] > 1) return false;
  return true;
}

bool DeltaMap::is_mono() const {
  for (std::size_t i = 1; i < images_.size(); ++i)
    if (images_[i] == images_[i - 1]) return false;
  return true;
}

std::string DeltaMap::to_string() const {
  return std::to_string(src_.n) + " -> " + std::to_string(dst_.n) + " : " + detail::images_to_string(images_);
}

std::vector<DeltaMap> enum_hom_delta(Ordinal m, Ordinal n) {
  std::vector<DeltaMap> out;
  std::vector<std::size_t> images(m.dots(), 0);
  // odometer over weakly increasing sequences, lexicographic
  while (true) {
    out.emplace_back(m, n, images);
    std::size_t i = images.size();
    while (i > 0 && images[i - 1] == n.n) --i;
    if (i == 0) break;
    const std::size_t v = images[i - 1] + 1;
    for (std::size_t j = i - 1; j < images.size(); ++j) images[j] = v;
  }
  return out;
}

DeltaMap compose_delta(const DeltaMap& f, const DeltaMap& g) {
  if (f.dst() != g.src())
    throw std::invalid_argument("compose_delta: codomain " + std::to_string(f.dst().n) + " != domain " +
                                std::to_string(g.src().n));
  std::vector<std::size_t> images(f.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(f(i));
  return {f.src(), g.dst(), std::move(images)};
}

EpiMonoFactorization epi_mono_factor(const DeltaMap& f) {
  std::vector<std::size_t> image_dots;
  std::vector<std::size_t> epi_images;
  for (std::size_t v : f.images()) {
    if (image_dots.empty() || image_dots.back() != v) image_dots.push_back(v);
    epi_images.push_back(image_dots.size() - 1);
  }
  const Ordinal middle{image_dots.size() - 1};
  return {DeltaMap(f.src(), middle, std::move(epi_images)), DeltaMap(middle, f.dst(), std::move(image_dots)),
          f.is_epi(), f.is_mono()};
}

DeltaDotSum dotsum_delta(Ordinal m, Ordinal n) {
  const Ordinal sum{m.n + n.n};
  std::vector<std::size_t> left(m.dots()), right(n.dots());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
  for (std::size_t i = 0; i < right.size(); ++i) right[i] = m.n + i;
  return {sum, DeltaMap(m, sum, std::move(left)), DeltaMap(n, sum, std::move(right))};
}

DeltaMap coface(std::size_t n, std::size_t i) {
  if (n == 0 || i > n) throw std::invalid_argument("coface: need n >= 1 and i <= n");
  std::vector<std::size_t> images;
  for (std::size_t k = 0; k <= n; ++k)
    if (k != i) images.push_back(k);
  return {Ordinal{n - 1}, Ordinal{n}, std::move(images)};
}

DeltaMap codegeneracy(std::size_t n, std::size_t i) {
  if (i > n) throw std::invalid_argument("codegeneracy: need i <= n");
  std::vector<std::size_t> images;
  for (std::size_t k = 0; k <= n + 1; ++k) images.push_back(k <= i ? k : k - 1);
  return {Ordinal{n + 1}, Ordinal{n}, std::move(images)};
}

DeltaMap parse_delta_map(const std::string& text) {
  const auto parts = detail::split_map_text(text);
  auto as_number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("ordinal must be a nonnegative integer: `" + s + "`");
    return std::stoul(s);
  };
  return {Ordinal{as_number(parts.src)}, Ordinal{as_number(parts.dst)}, parts.images};
}

}  // namespace fatdelta
