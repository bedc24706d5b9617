#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return omzv::cli::run_cli(args, std::cout, std::cerr, omzv::cli::process_env());
}
