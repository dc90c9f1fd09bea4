#include <iostream>

#include "pqbasis/cli.hpp"

int main(int argc, char** argv) { return pqbasis::cli::run_cli(argc, argv, std::cout, std::cerr); }
