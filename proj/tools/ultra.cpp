#include <iostream>
#include <string>
#include <vector>

#include "ultra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ultra::cli::run(args, std::cout, std::cerr);
}
