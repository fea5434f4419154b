#pragma once

#include <iosfwd>

namespace memoryless::cli {

// Exit codes: 0 success, 1 domain error (including a FAIL verdict), 2 usage error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace memoryless::cli
