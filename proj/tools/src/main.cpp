#include <iostream>

#include "webgraph/cli.hpp"

int main(int argc, char** argv) { return webgraph::cli::run(argc, argv, std::cout, std::cerr); }
