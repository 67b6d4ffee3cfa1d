#include <iostream>

#include "msres/cli.hpp"

int main(int argc, char** argv) { return msres::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
