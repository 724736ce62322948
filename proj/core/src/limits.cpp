#include "fatdelta/limits.hpp"

#include <cstdlib>

namespace fatdelta {

namespace {

std::size_t parse_count(const std::string& s, const std::string& text) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw std::invalid_argument("malformed size limit `" + text + "`");
  const auto n = static_cast<std::size_t>(std::stoul(s));
  if (n == 0) throw std::invalid_argument("size limit `" + text + "` must be positive");
  return n;
}

}  // namespace

SizeLimits parse_size_limits(const std::string& text) {
  SizeLimits l;
  const auto slash = text.find('/');
  l.max_dots = parse_count(text.substr(0, slash), text);
  if (slash != std::string::npos) l.max_arrows = parse_count(text.substr(slash + 1), text);
  return l;
}

SizeLimits size_limits_from_env() {
  const char* v = std::getenv("FATDELTA_MAX_SIZE");
  if (v == nullptr || *v == '\0') return {};
  return parse_size_limits(v);
}

void check_dots(const SizeLimits& limits, std::size_t dots, const std::string& what) {
  if (dots > limits.max_dots)
    throw LimitExceeded(what + " has " + std::to_string(dots) + " dots, above the cap of " +
                        std::to_string(limits.max_dots));
}

void check_arrows(const SizeLimits& limits, std::size_t arrows, const std::string& what) {
  if (arrows > limits.max_arrows)
    throw LimitExceeded(what + " has " + std::to_string(arrows) + " arrows, above the cap of " +
                        std::to_string(limits.max_arrows));
}

}  // namespace fatdelta
