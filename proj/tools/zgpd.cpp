#include <iostream>

#include "zgpd/cli.hpp"

int main(int argc, char** argv) {
  return zgpd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
