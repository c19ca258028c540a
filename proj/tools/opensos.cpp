#include <iostream>

#include "opensos/cli.hpp"

int main(int argc, char** argv) { return opensos::run_cli(argc, argv, std::cout, std::cerr); }
