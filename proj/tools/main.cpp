#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  return motive_forge::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
