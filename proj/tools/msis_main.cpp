#include <iostream>

#include "msis/cli.hpp"

int main(int argc, char** argv) {
    return msis::cli::run(argc, argv, std::cout, std::cerr);
}
