#include <iostream>

#include "awg/cli.hpp"

int main(int argc, char** argv) { return awg::cli::run(argc, argv, std::cout, std::cerr); }
