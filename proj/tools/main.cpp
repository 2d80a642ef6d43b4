#include <iostream>
#include <string>
#include <vector>

#include "hypertrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypertrace::cli::run(args, std::cout, std::cerr);
}
