#include <iostream>

#include "cfgpoly/cli.hpp"

int main(int argc, char** argv) { return cfgpoly::cli::run(argc, argv, std::cout, std::cerr); }
