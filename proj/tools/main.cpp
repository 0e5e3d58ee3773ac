#include <iostream>
#include <string>
#include <vector>

#include "betadyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betadyn::dispatch(args, std::cout, std::cerr);
}
