#include <iostream>

#include "oodd/cli.hpp"

int main(int argc, char** argv) { return oodd::run_cli(argc, argv, std::cout, std::cerr); }
