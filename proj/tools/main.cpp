#include <iostream>

#include "frobenius/cli.hpp"

int main(int argc, char** argv) { return frobenius::run_cli(argc, argv, std::cout, std::cerr); }
