#include <iostream>

#include "superdix/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return superdix::run_cli(args, std::cout, std::cerr);
}
