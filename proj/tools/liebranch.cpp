#include <iostream>

#include "liebranch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return liebranch::run_cli(args, std::cout, std::cerr);
}
