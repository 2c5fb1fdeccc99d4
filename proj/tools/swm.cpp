#include "swm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return swm::cli_dispatch(argc, argv, std::cout, std::cerr); }
