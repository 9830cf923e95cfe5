#include <iostream>

#include "flattorus/cli.hpp"

int main(int argc, char** argv) { return flattorus::run_cli(argc, argv, std::cout, std::cerr); }
