#include <iostream>

#include "bihcp/cli.hpp"

int main(int argc, char** argv) { return bihcp::cli::run(argc, argv, std::cout, std::cerr); }
