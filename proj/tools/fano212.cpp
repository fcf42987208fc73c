#include <iostream>
#include <string>
#include <vector>

#include "fano212/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fano212::run(args, std::cout, std::cerr);
}
