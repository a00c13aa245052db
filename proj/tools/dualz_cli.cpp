#include <iostream>
#include <string>
#include <vector>

#include "dualz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dualz::run_cli(args, std::cin, std::cout, std::cerr);
}
