#include <iostream>

#include "choicectx/cli.hpp"

int main(int argc, char** argv) { return choicectx::cli::main(argc, argv, std::cout, std::cerr); }
