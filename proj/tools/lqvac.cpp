#include <iostream>
#include <string>
#include <vector>

#include "lqvac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lqvac::cli::run(args, std::cout, std::cerr);
}
