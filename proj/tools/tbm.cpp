#include <iostream>

#include "tbm/cli.hpp"

int main(int argc, char** argv) { return tbm::cli::run(argc, argv, std::cout, std::cerr); }
