#include <iostream>

#include "klext/cli.hpp"

int main(int argc, char** argv) { return klext::run_cli(argc, argv, std::cout, std::cerr); }
