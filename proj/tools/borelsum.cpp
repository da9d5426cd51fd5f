#include <iostream>

#include "borelsum/cli.hpp"

int main(int argc, char** argv) { return borelsum::cli::run(argc, argv, std::cout, std::cerr); }
