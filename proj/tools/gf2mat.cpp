#include "cli/app.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  return gf2::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
