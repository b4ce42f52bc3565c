#include <iostream>

#include "cli_impl.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dunkl::run_cli(args, std::cout, std::cerr);
}
