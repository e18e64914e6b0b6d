// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 usage or parse error.
#pragma once

#include <iosfwd>

namespace severi {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace severi
