#include <iostream>

#include "acyclekit/cli.hpp"

int main(int argc, char** argv) { return acyclekit::run_cli(argc, argv, std::cout, std::cerr); }
