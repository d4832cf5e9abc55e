#include <iostream>

#include "carand/cli.hpp"

int main(int argc, char** argv) { return carand::cli::run(argc, argv, std::cout, std::cerr); }
