// Command-line surface: construct, analyze, sweep, simulate.
#pragma once

#include <string>
#include <vector>

namespace arg {

enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kValidationError = 2,
    kStall = 3,
    kNotFound = 4,
    kIoError = 5,
};

// Full dispatcher; argv excludes the program name.
int cli_dispatch(const std::vector<std::string>& argv);

int cli_main(int argc, char** argv);

}  // namespace arg
