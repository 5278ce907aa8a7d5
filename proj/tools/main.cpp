#include <iostream>

#include "adelic/harness/cli.hpp"

int main(int argc, char** argv) { return adelic::harness::run(argc, argv, std::cout, std::cerr); }
