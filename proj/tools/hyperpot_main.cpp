#include <iostream>
#include <vector>

#include "hyperpot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return hyperpot::cli_main(args, std::cout, std::cerr);
}
