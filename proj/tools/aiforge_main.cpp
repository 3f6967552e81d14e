#include <iostream>
#include <string>
#include <vector>

#include "aiforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return aiforge::run_cli(args, std::cout, std::cerr);
}
