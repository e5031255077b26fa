#include <iostream>
#include <string>
#include <vector>

#include "heat1d/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return heat1d::cli::main_entry(args, std::cout, std::cerr);
}
