#ifndef CUNTZ_COMMANDS_HPP
#define CUNTZ_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cuntz {

// The command-line surface, callable in-process for tests. Exit codes:
// 0 for any computed verdict (including negative ones), 1 for parse or
// validation errors, 2 when a budget ran out (inconclusive answers).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuntz

#endif
