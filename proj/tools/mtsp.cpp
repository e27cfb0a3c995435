#include <iostream>

#include "mtsp/cli.hpp"

int main(int argc, char** argv) { return mtsp::cli_main(argc, argv, std::cout, std::cerr); }
