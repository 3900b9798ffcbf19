#include <iostream>

#include "kpush_cli/run.hpp"

int main(int argc, char** argv) { return kpush::cli::run_cli(argc, argv, std::cout, std::cerr); }
