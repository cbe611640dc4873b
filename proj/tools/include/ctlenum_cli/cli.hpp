#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctlenum::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,        // bad arguments or an invalid model, formula or digraph
  kFragmentMismatch = 3,  // fragment oracle requested outside its fragment
  kNotTrimmable = 4,      // trim on a formula that is not an AF/AG chain
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ctlenum::cli
