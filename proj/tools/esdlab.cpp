#include <iostream>

#include "esdlab/cli.hpp"

int main(int argc, char** argv) { return esdlab::cli::run(argc, argv, std::cout, std::cerr); }
