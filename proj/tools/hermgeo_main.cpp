#include <iostream>

#include "hermgeo/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hermgeo::io::run(args, std::cin, std::cout, std::cerr);
}
