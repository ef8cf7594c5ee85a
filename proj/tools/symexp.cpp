#include <iostream>

#include "symexp/cli.hpp"

int main(int argc, char** argv) { return symexp::cli::run(argc, argv, std::cout, std::cerr); }
