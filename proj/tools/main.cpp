#include <iostream>
#include <string>
#include <vector>

#include "og10lat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return og10lat::cli::run(args, std::cout, std::cerr);
}
