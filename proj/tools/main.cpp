#include <iostream>

#include "primesteg/cli.hpp"

int main(int argc, char** argv) { return primesteg::run_cli(argc, argv, std::cout, std::cerr); }
