#include <iostream>

#include "ucrga_cli.hpp"

int main(int argc, char** argv) { return ucrga::cli::run(argc, argv, std::cout, std::cerr); }
