#include <iostream>

#include "xprod/cli.hpp"

int main(int argc, char** argv) {
  return xprod::run_cli(argc, argv, std::cout, std::cerr);
}
