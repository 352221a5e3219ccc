// Walks a symmetric instance without storing anything and compares the
// number of visited permutations with the closed-form count.

#include <cstdlib>
#include <iostream>

#include "shuffle/core.hpp"
#include "shuffle/formulas.hpp"

int main(int argc, char** argv) {
  const unsigned n = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 10;
  shuffle::CountingVisitor counter;
  shuffle::enumerate(shuffle::ShuffleSpec{n, n}, counter);
  std::cout << "visited  " << counter.count << '\n'
            << "expected " << shuffle::formulas::shuffle_count(n, n) << '\n'
            << "storage  " << shuffle::formulas::storage_bytes(n, n) << " bytes\n";
}
