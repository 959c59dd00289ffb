#include <iostream>
#include <string>
#include <vector>

#include "fencetri/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fencetri::run_cli(args, std::cout, std::cerr);
}
