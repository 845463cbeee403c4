// Command-line front end: trigapprox <subcommand> [flags]. See README.md.

#include <iostream>
#include <string>
#include <vector>

#include "trigapprox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return trigapprox::cli::main_entry(args, std::cout, std::cerr);
}
