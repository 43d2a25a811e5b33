#include <iostream>

#include "srdg_tools/cli.hpp"

int main(int argc, char** argv) { return srdg::tools::run_cli(argc, argv, std::cout, std::cerr); }
