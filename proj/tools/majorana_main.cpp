#include <iostream>

#include "majorana/cli.hpp"

int main(int argc, char** argv) {
  return majorana::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
