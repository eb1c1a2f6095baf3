#ifndef DCUP_CLI_HPP
#define DCUP_CLI_HPP

#include <ostream>

namespace dcup {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 success, 1 invalid input, 2 failed invariant.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcup

#endif
