#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weave::cli {

enum ExitCode : int {
    kOk = 0,
    kTestsFailed = 1,
    kConfigError = 2,
    kParseError = 3,  // feature parse, identifier collision, template
    kExpansionError = 4,
    kRefusedOverwrite = 5,
};

/// Entry point for the scenario-weave tool. `args` excludes the program name.
/// Reports and generated files go to their declared paths, logs to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weave::cli
