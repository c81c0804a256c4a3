#include <iostream>

#include "blocksets/cli.hpp"

int main(int argc, char** argv) { return blocksets::cli::run_cli(argc, argv, std::cout, std::cerr); }
