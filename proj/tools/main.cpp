#include <iostream>

#include "cyclodiv/cli.hpp"

int main(int argc, char** argv) { return cyclodiv::run_cli(argc, argv, std::cout, std::cerr); }
