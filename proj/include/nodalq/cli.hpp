#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodalq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

/// Runs one command. `args` is argv including the program name. The
/// RunReport JSON goes to `out`, diagnostics to `err`. Exit codes: 0 on
/// success, 1 on usage or input errors, 2 when the computed verdict
/// contradicts the expected geometry.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodalq::cli
