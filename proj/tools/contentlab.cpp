#include <iostream>

#include "contentlab/cli.hpp"

int main(int argc, char** argv) { return contentlab::run_cli(argc, argv, std::cout, std::cerr); }
