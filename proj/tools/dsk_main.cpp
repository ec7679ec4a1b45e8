#include <iostream>

#include "dsk/cli.hpp"

int main(int argc, char** argv) {
  return dsk::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
