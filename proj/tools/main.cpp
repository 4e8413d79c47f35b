#include <iostream>
#include <string>
#include <vector>

#include "cuntz/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuntz::run_command(args, std::cout, std::cerr);
}
