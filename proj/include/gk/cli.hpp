#pragma once

#include <ostream>

namespace gk {

// Exit codes: 0 success, 1 invalid input, 2 internal failure or rejected certificate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gk
