#pragma once
#include <ostream>

namespace flns {

// Command-line entry point (gen / norm / simulate / verify).  Returns the
// process exit code: 0 success, 1 configuration or usage error, 2 numeric
// failure (failed suite, numeric contract violation).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace flns
