#include "genera/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return genera::run_cli(argc, argv, std::cout, std::cerr);
}
