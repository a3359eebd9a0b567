#include <iostream>

#include "hhkit/cli.hpp"

int main(int argc, char** argv) { return hhkit::cli::run(argc, argv, std::cout, std::cerr); }
