#include <iostream>

#include "pathenergy/cli.hpp"

int main(int argc, char** argv) { return pathenergy::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
