#include <iostream>
#include <string>
#include <vector>

#include "bgm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bgm::run_cli(args, std::cout);
}
