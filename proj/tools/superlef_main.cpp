#include <iostream>

#include "superlef/normed_algebra.hpp"

int main() {
  std::cout << "superlef (check registry not yet wired)\n";
  return 0;
}
