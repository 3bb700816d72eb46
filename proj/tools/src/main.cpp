#include <iostream>

#include "owf_cli/commands.hpp"

int main(int argc, char** argv) { return owf::cli::run(argc, argv, std::cout, std::cerr); }
