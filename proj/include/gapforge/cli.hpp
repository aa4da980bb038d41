#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gapforge {

/// Exit codes: 0 success, 1 validation or check failure, 2 usage error.
/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace gapforge
