#include <iostream>
#include <vector>

#include "homrine/cli_main.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return homrine::cli::run(std::move(args), std::cout, std::cerr);
}
