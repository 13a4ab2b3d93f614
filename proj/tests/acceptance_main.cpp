#include <iostream>

#include "hitchinlab/acceptance.hpp"

int main() {
  const bool ok = hitchinlab::acceptance::run_and_print(std::cout);
  return ok ? 0 : 1;
}
