#pragma once

#include <string>
#include <vector>

namespace chern {

/// exit_code: 0 pass, 1 a descriptor violated a bound, 2 usage error.
struct CommandResult {
    int exit_code = 0;
    std::string payload;
    std::string error;
};

/// Runs chernctl on argv without the program name. Never throws.
CommandResult execute(const std::vector<std::string>& args);

}  // namespace chern
