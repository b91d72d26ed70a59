#pragma once

#include <ostream>

namespace eqvar {

// Exit status: 0 success/true, 1 false, 2 usage or data error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eqvar
