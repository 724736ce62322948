#include <iostream>

#include "fatdelta/cli.hpp"

int main(int argc, char** argv) {
  return fatdelta::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
