#include <iostream>

#include "equichord/cli.hpp"

int main(int argc, char** argv) { return equichord::cli::run(argc, argv, std::cout, std::cerr); }
