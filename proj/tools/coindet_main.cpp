#include <iostream>
#include <vector>

#include "coindet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coindet::cli::run(args, std::cout, std::cerr);
}
