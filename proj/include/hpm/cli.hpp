#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpm::cli {

/// Published slope at the origin, u'(0) = 2 f2, used when --slope is omitted.
inline constexpr const char* kReferenceTwoF2 = "-1.58807102261137531";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpm::cli
