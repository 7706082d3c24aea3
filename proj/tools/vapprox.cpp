#include <iostream>

#include "vapprox/cli.hpp"

int main(int argc, char** argv) { return vapprox::cli::run({argv + 1, argv + argc}, std::cout); }
