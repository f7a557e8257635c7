#include <iostream>

#include "vck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vck::run_cli(args, std::cout, std::cerr);
}
