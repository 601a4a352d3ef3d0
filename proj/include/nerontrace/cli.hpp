#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace nerontrace {

// Entry point behind main(): parses argv-style arguments (program name
// excluded) and executes one subcommand.  Streams are injectable for
// testing.  Returns the process exit code: 0 success, 1 input or
// validation error, 2 internal inconsistency.
int run(const std::vector<std::string>& args,
        std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace nerontrace
