#include <iostream>
#include <string>
#include <vector>

#include "serret/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return serret::run(args, std::cout, std::cerr);
}
