#ifndef AOWENO_CLI_HPP_
#define AOWENO_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace aoweno {

/// Command-line front end: `run | converge | compare` plus config/flag
/// handling. Flags override config-file values. Returns the process exit
/// code (0 ok, 2 config error, 3 blow-up).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace aoweno

#endif  // AOWENO_CLI_HPP_
