#include <iostream>
#include <string>
#include <vector>

#include "fractri/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv, argv + argc);
  return fractri::cli::run(args, std::cin, std::cout, std::cerr);
}
