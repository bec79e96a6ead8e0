#include "tropseq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tropseq::cli::main(argc, argv, std::cout, std::cerr); }
