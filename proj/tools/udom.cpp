#include <iostream>

#include "udom/cli.hpp"

int main(int argc, char** argv) { return udom::cli::run(argc, argv, std::cout, std::cerr); }
