#include <cstdio>
#include <string>
#include <vector>

#include "mcell/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    mcell::CommandResult r = mcell::run_command(args);
    std::fputs(r.output.c_str(), stdout);
    return r.exit_code;
}
