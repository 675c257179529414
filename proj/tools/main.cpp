#include <iostream>

#include "qmap/cli.hpp"

int main(int argc, char** argv) { return qmap::run(argc, argv, std::cin, std::cout, std::cerr); }
