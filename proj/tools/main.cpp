#include <iostream>
#include <string>
#include <vector>

#include "hsfact/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hsfact::cli::run(args, std::cout, std::cerr);
}
