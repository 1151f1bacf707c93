// This file is part of hydroc, released under the MIT License.

#include <iostream>
#include <string>
#include <vector>

#include "hydroc/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hydroc::run_cli(args, std::cout, std::cerr);
}
