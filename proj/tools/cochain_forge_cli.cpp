#include "cochain_forge/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return cochain_forge::run_cli(argc, argv, std::cout, std::cerr);
}
