#include <iostream>
#include <string>
#include <vector>

#include "causerep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return causerep::run_cli(args, std::cout, std::cerr);
}
