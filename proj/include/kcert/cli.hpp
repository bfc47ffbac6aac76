#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kcert {

/// Environment variable naming a JSON config file; --config takes precedence.
inline constexpr const char* kConfigEnvVar = "KCERT_CONFIG";

/// Exit codes: 0 all PASS, 1 any FAIL or MISMATCH, 2 usage or I/O error.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace kcert
