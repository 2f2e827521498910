#include <iostream>
#include <string>
#include <vector>

#include "kmc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kmc::run_cli(args, std::cout, std::cerr);
}
