#include <iostream>

#include "qsh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsh::cli::run(args, std::cout, std::cerr);
}
