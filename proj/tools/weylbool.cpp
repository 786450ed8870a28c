#include <iostream>

#include "weylbool/cli.hpp"

int main(int argc, char** argv) {
  return weylbool::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
