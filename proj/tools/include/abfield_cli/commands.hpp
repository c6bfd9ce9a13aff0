#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abfield::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitValidation = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abfield::cli
