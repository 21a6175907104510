#pragma once

#include <ostream>

namespace quatcurve {

/// Exit codes: 0 success, 1 a verification check failed, 2 bad input or an
/// internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatcurve
