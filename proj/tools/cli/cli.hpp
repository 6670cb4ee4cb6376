#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motive_forge::cli {

inline constexpr const char* kToolName = "motive-forge";
inline constexpr const char* kVersion = "0.1.0";

/// Runs one job. args excludes the program name. Exit 0 on success,
/// 2 on parse errors, 1 on engine errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motive_forge::cli
