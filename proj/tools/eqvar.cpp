#include <iostream>

#include "eqvar/cli.hpp"

int main(int argc, char** argv) { return eqvar::run_cli(argc, argv, std::cout, std::cerr); }
