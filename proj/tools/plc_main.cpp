#include <iostream>
#include <string>
#include <vector>

#include "plc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return plc::cli::run(args, std::cout, std::cerr);
}
