#include <iostream>

#include "oqmi/cli.hpp"

int main(int argc, char** argv) { return oqmi::cli::run(argc, argv, std::cout, std::cerr); }
