#ifndef SBE_CLI_HPP
#define SBE_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace sbe {

// Dispatches the gen/solve/sweep/verify/help subcommands. `args` excludes
// the program name. Returns 0 on success, 1 on verification failure, 2 on
// usage errors; every failure path writes one `error:` line to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

} // namespace sbe

#endif
