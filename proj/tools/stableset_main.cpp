#include <iostream>

#include "stableset/io.hpp"

int main(int argc, char** argv) {
    return stableset::run_cli(argc, argv, std::cout, std::cerr);
}
