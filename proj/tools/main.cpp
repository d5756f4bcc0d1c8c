#include <iostream>
#include <string>
#include <vector>

#include "bnalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bnalg::run(args, std::cout, std::cerr);
}
