#include <iostream>

#include "flopkit/cli/cli.hpp"

int main(int argc, char** argv) {
  return flopkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
