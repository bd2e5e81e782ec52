#pragma once

#include <ostream>
#include <span>
#include <string>

namespace glam {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on bad input, 2 when an
/// internal check fails.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace glam
