#include <iostream>

#include "cyclosemi/cli.hpp"

int main(int argc, char** argv) { return cyclosemi::run_cli(argc, argv, std::cout, std::cerr); }
