#include <iostream>
#include <string>
#include <vector>

#include "hob/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hob::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
