#include <iostream>

#include "corient/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return corient::run_cli(argc, argv, std::cout, std::cerr);
}
