#include <iostream>

#include "hgc/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hgc::cli::run(args, std::cout, std::cerr);
}
