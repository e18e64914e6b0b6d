#include "severi/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return severi::run_cli(argc, argv, std::cout, std::cerr); }
