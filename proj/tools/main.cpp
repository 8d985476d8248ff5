#include <iostream>
#include <vector>

#include "realenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return realenum::cli_run(args, std::cout, std::cerr);
}
