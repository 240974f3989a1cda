#include "hermann/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hermann::run(argc, argv, std::cout, std::cerr); }
