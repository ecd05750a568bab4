#pragma once

#include <string>
#include <vector>

namespace mcell {

// Exit codes: 0 ok, 2 input error, 3 unsupported (or Unknown under
// --strict-known).  Output is a single text or JSON document.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

CommandResult run_command(const std::vector<std::string>& args);

}  // namespace mcell
