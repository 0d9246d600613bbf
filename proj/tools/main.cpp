#include <iostream>

#include "qic/cli.hpp"

int main(int argc, char** argv) {
    return qic::cli::cli_main(argc, argv, std::cout, std::cerr);
}
