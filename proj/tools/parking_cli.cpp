#include <iostream>
#include <string>
#include <vector>

#include "parking/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return parking::cli::run(args, std::cout, std::cerr);
}
