#include <iostream>

#include "spiral/cli.hpp"

int main(int argc, char** argv) { return spiral::cli::run(argc, argv, std::cout, std::cerr); }
