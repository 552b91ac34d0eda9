#include <iostream>

#include "segre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return segre::run_command(args, std::cout, std::cerr);
}
