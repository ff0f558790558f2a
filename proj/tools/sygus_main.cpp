#include <iostream>
#include <string>
#include <vector>

#include "sygus/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sygus::run_cli(args, std::cin, std::cout, std::cerr);
}
