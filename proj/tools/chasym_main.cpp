#include <iostream>

#include "chasym/cli.hpp"

int main(int argc, char** argv) { return chasym::run_cli(argc, argv, std::cout, std::cerr); }
