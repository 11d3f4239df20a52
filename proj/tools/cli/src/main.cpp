#include <iostream>

#include "ptw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptw::cli::run(args, std::cout, std::cerr);
}
