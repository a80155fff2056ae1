#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cxw::cli {

/// Exit codes: 0 pass, 1 check failure or unwritable output, 2 usage error.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cxw::cli
