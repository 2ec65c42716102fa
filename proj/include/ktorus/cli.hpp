#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktorus {

inline constexpr const char* kVersion = "1.0.0";

// Command-line front end. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 input error, 2 budget exceeded,
// 3 verification failure. All output goes to the supplied streams, so tests
// drive the CLI in process; json and csv output is byte-stable for fixed
// inputs and seed (timings appear only in md output).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktorus
