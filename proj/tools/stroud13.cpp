#include <iostream>

#include "stroud/cli.hpp"

int main(int argc, char** argv) { return stroud::cli::run(argc, argv, std::cout, std::cerr); }
