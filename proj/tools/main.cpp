#include <iostream>
#include <string>
#include <vector>

#include "ceamp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ceamp::run_cli(args, std::cin, std::cout, std::cerr);
}
