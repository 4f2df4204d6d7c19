#include <iostream>

#include "cubeturan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubeturan::run_cli(args, std::cout, std::cerr);
}
