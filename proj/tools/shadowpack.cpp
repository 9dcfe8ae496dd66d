#include <iostream>

#include "shadowpack/cli.hpp"

int main(int argc, char** argv) {
  return shadowpack::run_cli(argc, argv, std::cout, std::cerr);
}
