#include <iostream>
#include <string>
#include <vector>

#include "ptorus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptorus::cli::run(args, std::cout, std::cerr);
}
