#include <iostream>

#include "twinkit/cli.hpp"

int main(int argc, char** argv) { return twinkit::cli::run(argc, argv, std::cout, std::cerr); }
