#include <iostream>
#include <string>
#include <vector>

#include "fungraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fungraph::cli::run(args, std::cout, std::cerr);
}
