#include <iostream>

#include "quatcurve/cli.hpp"

int main(int argc, char** argv) { return quatcurve::run_cli(argc, argv, std::cout, std::cerr); }
