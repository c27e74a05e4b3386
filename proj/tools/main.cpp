#include <iostream>

#include "dtheta/cli.hpp"

int main(int argc, char** argv) {
  return dtheta::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
