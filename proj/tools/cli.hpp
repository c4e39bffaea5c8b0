#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planesum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one planesum command. args[0] is the program name. Returns 0 on
/// success, 1 when a check fails or a counterexample is found, 2 on usage,
/// parse or input errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planesum::cli
