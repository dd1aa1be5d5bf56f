#include "eitlab/harness/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return eitlab::harness::run_cli(argc, argv, std::cout, std::cerr);
}
