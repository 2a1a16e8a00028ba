#include <iostream>
#include <string>
#include <vector>

#include "urnwalk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return urnwalk::cli::run_command(args, std::cout, std::cerr);
}
