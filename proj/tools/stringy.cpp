#include "stringy/run.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return stringy::run_cli(argc, argv, std::cout, std::cerr);
}
