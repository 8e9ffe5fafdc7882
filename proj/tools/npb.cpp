#include <iostream>

#include "npb/cli.hpp"

int main(int argc, char** argv) {
  return npb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
