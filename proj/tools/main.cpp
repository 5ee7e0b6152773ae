#include <iostream>

#include "qbern/cli.hpp"

int main(int argc, char** argv) {
  return qbern::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
