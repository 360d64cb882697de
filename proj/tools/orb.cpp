#include <iostream>
#include <string>
#include <vector>

#include "orb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orb::run(args, std::cout, std::cerr);
}
