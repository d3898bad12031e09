#include <iostream>

#include "gupsu2_cli/cli.hpp"

int main(int argc, char** argv) { return gupsu2::cli::main_entry(argc, argv, std::cout, std::cerr); }
