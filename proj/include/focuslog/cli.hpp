// cli.hpp - command-line front end, stream-parameterised for testing
#ifndef FOCUSLOG_CLI_HPP
#define FOCUSLOG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace focuslog::cli {

// exit codes: 0 full success, 1 any sentence failed to parse, 2 usage error
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace focuslog::cli

#endif
