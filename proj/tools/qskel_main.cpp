#include <iostream>

#include "qskel/cli.hpp"

int main(int argc, char** argv) { return qskel::run_cli(argc, argv, std::cout, std::cerr); }
