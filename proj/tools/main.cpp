#include <iostream>

#include "ajlab/cli.hpp"

int main(int argc, char** argv) {
  return ajlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
