#include <iostream>
#include <string>
#include <vector>

#include "gencomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gencomp::cli::run(args, std::cout, std::cerr);
}
