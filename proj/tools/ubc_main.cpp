#include <iostream>

#include "ubc/cli.hpp"

int main(int argc, char** argv) { return ubc::cli::run(argc, argv, std::cout, std::cerr); }
