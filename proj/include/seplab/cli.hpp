// cli.hpp -- command-line dispatch, testable in-process
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seplab {

// Exit codes: 0 success, 2 parse error, 3 semantic error, 4 resource cap,
// 5 experiment disagreement.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace seplab
