#include <iostream>

#include "twodir/cli.hpp"

int main(int argc, char** argv) { return twodir::run_cli(argc, argv, std::cout, std::cerr); }
