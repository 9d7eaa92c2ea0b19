#include <iostream>

#include "schwartzlab/cli.hpp"

int main(int argc, char** argv) { return schwartzlab::run_cli(argc, argv, std::cout, std::cerr); }
