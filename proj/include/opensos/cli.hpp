#pragma once

#include <iosfwd>

namespace opensos {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kFails = 1, kInputError = 2, kInconclusive = 3 };

/// Runs the command line front end; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opensos
