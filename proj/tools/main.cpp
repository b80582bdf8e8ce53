#include "superalg/cli.hpp"

#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return superalg::cli::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
