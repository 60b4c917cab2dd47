#include <iostream>
#include <string>
#include <vector>

#include "cuknot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cuknot::cli::run(args, std::cout, std::cerr);
}
