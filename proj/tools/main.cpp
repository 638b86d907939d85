#include <iostream>

#include "flns/cli.hpp"

int main(int argc, char** argv) { return flns::cli_main(argc, argv, std::cout, std::cerr); }
