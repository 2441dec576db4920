#include <iostream>
#include <string>
#include <vector>

#include "namerel/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return namerel::RunCli(args, std::cout, std::cerr);
}
