#include <iostream>

#include "dcup/cli.hpp"

int main(int argc, char** argv) { return dcup::run(argc, argv, std::cout, std::cerr); }
