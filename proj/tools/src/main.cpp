#include <iostream>

#include "atoric_cli/cli.hpp"

int main(int argc, char** argv) { return atoric::cli::run(argc, argv, std::cout, std::cerr); }
