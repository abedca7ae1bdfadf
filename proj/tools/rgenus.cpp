#include <iostream>
#include <string>
#include <vector>

#include "rgenus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rgenus::run_cli(args, std::cout, std::cerr);
}
