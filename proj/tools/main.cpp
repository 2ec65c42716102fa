#include <iostream>
#include <string>
#include <vector>

#include "ktorus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ktorus::run_cli(args, std::cout, std::cerr);
}
