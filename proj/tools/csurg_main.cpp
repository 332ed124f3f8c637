#include <iostream>

#include "csurg/cli.hpp"

int main(int argc, char** argv) { return csurg::cli::run(argc, argv, std::cout, std::cerr); }
