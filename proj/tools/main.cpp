#include <iostream>

#include "reprange_cli.hpp"

int main(int argc, char** argv) {
    std::cout << std::unitbuf;
    return reprange::cli::run(argc, argv, std::cout, std::cerr);
}
