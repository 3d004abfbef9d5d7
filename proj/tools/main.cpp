#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return ppacli::run(argc, argv, std::cout, std::cerr); }
