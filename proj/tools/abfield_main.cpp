#include <iostream>
#include <string>
#include <vector>

#include "abfield_cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return abfield::cli::run_cli(args, std::cout, std::cerr);
}
