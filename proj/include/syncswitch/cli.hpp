#pragma once

// Command-line driver. Exit status: 0 success, 1 domain error (for example a
// non-synchronizing input or a failed check), 2 usage or input format error.

#include <iosfwd>
#include <string>
#include <vector>

namespace syncswitch::cli {

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace syncswitch::cli
