#include <iostream>

#include "geomkit/cli.hpp"

int main(int argc, char** argv) {
  return geomkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
