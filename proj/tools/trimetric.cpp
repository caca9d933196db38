#include <iostream>

#include "trimetric/cli.hpp"

int main(int argc, char** argv) { return trimetric::cli::run(argc, argv, std::cout, std::cerr); }
