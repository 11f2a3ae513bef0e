#include <iostream>

#include "bwtnice/cli.hpp"

int main(int argc, char** argv) {
  return bwtnice::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
