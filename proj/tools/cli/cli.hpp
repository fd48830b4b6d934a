#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zkfabric::cli {

// Exit codes: 0 accept / success, 1 reject or abort, 2 usage or input error.
inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zkfabric::cli
