#include <iostream>
#include <string>
#include <vector>

#include "qtg/cli.hpp"

int main(int argc, char** argv) {
  return qtg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                      std::cerr);
}
