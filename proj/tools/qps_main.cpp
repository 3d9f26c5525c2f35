#include <iostream>
#include <string>
#include <vector>

#include "qps/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qps::run_cli(args, std::cout, std::cerr);
}
