#include <iostream>
#include <string>
#include <vector>

#include "spdom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spdom::cli::run(args, std::cout, std::cerr);
}
