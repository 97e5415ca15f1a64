#include <iostream>

#include "riposte/cli.hpp"

int main(int argc, char** argv) {
    return riposte::cli::run(argc, argv, std::cout, std::cerr);
}
