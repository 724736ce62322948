#pragma once

// Helpers for the textual map notation `SRC -> DST : [i0,i1,...]`.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace fatdelta::detail {

struct MapText {
  std::string src;
  std::string dst;
  std::vector<std::size_t> images;
};

std::string strip_spaces(const std::string& s);

/// Splits a map literal into its three parts. Throws std::invalid_argument.
MapText split_map_text(const std::string& text);

std::string images_to_string(const std::vector<std::size_t>& images);

}  // namespace fatdelta::detail
