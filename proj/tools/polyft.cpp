#include <iostream>

#include "polyft/cli.hpp"

int main(int argc, char** argv) {
  return polyft::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
