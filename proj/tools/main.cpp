#include <iostream>
#include <string>
#include <vector>

#include "sl2rep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sl2rep::run_cli(args, std::cout, std::cerr);
}
