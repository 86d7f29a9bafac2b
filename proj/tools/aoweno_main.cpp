#include <iostream>
#include <string>
#include <vector>

#include "aoweno/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aoweno::run_cli(args, std::cout, std::cerr);
}
