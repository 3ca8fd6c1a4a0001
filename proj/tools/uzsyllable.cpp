#include <iostream>
#include <string>
#include <vector>

#include "uzsyllable/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uzsyllable::runCli(args, std::cin, std::cout, std::cerr);
}
