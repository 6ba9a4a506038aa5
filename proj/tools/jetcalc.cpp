#include <iostream>

#include "jetcalc/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jetcalc::run(args, std::cout, std::cerr);
}
