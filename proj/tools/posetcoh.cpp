#include <iostream>

#include "posetcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return posetcoh::run_cli(args, std::cout, std::cerr);
}
