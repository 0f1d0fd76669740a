#include <iostream>

#include "gk/cli.hpp"

int main(int argc, char** argv) { return gk::run_cli(argc, argv, std::cout, std::cerr); }
