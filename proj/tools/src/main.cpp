#include <iostream>

#include "memoryless_cli/cli.hpp"

int main(int argc, char** argv) { return memoryless::cli::run(argc, argv, std::cout, std::cerr); }
