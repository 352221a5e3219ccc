// Prints both enumeration orders of a small instance, the complemented
// first output, and whether the two agree as sets.

#include <iostream>
#include <vector>

#include "shuffle/oracle.hpp"

namespace {

void print(const char* name, const std::vector<shuffle::Bitmask>& values) {
  std::cout << name << " = {";
  for (std::size_t k = 0; k < values.size(); ++k) std::cout << (k ? ", " : "") << values[k].value;
  std::cout << "}\n";
}

}  // namespace

int main() {
  const shuffle::ShuffleSpec spec{3, 2};
  const auto c = shuffle::oracle::collect(spec);
  const auto d = shuffle::oracle::collect({spec.ones, spec.zeros});
  print("C", c);
  print("D", d);
  print("C xor mask", shuffle::oracle::xor_all(c, shuffle::oracle::complement_mask(spec)));
  std::cout << "isomorphic: " << std::boolalpha << shuffle::oracle::verify_swap_isomorphism(spec) << '\n';
}
