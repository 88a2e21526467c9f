#include <iostream>

#include "cuspcodes/cli.hpp"

int main(int argc, char** argv) { return cuspcodes::run_cli(argc, argv, std::cout, std::cerr); }
