#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatdelta::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // validation or domain failure
inline constexpr int kUsage = 2;   // parse, IO or usage error

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`; `-` as a file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fatdelta::cli
