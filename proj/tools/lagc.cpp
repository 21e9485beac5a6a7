#include <iostream>
#include <string>
#include <vector>

#include "lagc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lagc::run(args, std::cout, std::cerr);
}
