#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "curvature/words.hpp"

namespace curv::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, EQUAL or PASS; 1 a definite negative; 2 Unknown or a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `@zz`, `@free:N` and `@surface:G` name the standard presentations with
/// their exact solvers; anything else is read as a presentation file and
/// handled generically.
Presentation resolve_presentation(const std::string& source);

}  // namespace curv::cli
