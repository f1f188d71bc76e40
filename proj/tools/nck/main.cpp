#include "nck/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return nck::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
