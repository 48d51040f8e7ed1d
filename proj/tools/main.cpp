#include <iostream>
#include <string>
#include <vector>

#include "bc1/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bc1::cli::run(args, std::cout, std::cerr);
}
