#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmne {

// Exit codes: 0 success, 2 mathematical refusal, 1 usage, I/O or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmne
