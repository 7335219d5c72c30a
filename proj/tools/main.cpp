#include <iostream>

#include "pmzv/cli/cli.hpp"

int main(int argc, char** argv) { return pmzv::cli::run(argc, argv, std::cout, std::cerr); }
