#include <iostream>

#include "fwid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fwid::run(args, std::cout, std::cerr);
}
