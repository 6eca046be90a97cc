#include <iostream>

#include "cyclosrg/cli.hpp"

int main(int argc, char** argv) {
    return cyclosrg::run_cli(argc, argv, std::cout, std::cerr);
}
