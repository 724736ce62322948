#pragma once

// Size caps guarding exhaustive enumerations, read from FATDELTA_MAX_SIZE
// as "D" or "D/A" (dots / arrows).

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatdelta {

struct SizeLimits {
  std::size_t max_dots = 8;
  std::size_t max_arrows = 30;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument on malformed text.
SizeLimits parse_size_limits(const std::string& text);
/// Defaults when the variable is unset.
SizeLimits size_limits_from_env();

void check_dots(const SizeLimits& limits, std::size_t dots, const std::string& what);
void check_arrows(const SizeLimits& limits, std::size_t arrows, const std::string& what);

}  // namespace fatdelta
