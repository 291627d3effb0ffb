#include <iostream>

#include "cyclokit/cli.hpp"

int main(int argc, char** argv) { return cyclokit::run_cli(argc, argv, std::cout, std::cerr); }
