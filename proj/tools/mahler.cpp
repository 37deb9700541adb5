#include "mahler/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return mahler::cli::run(argc, argv, std::cout, std::cerr); }
