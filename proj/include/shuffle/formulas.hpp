#pragma once

// Exact result-set size and storage predictions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace shuffle::formulas {

using BigCount = boost::multiprecision::cpp_int;

class undefined_log : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C(x + y, x), via the multiplicative form. Every partial product
/// C(n - k + i, i) is an integer, so each division is exact.
inline BigCount shuffle_count(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t k = std::min(x, y);
  const std::uint64_t n = x + y;
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// ceil(log2(n)) for n >= 1, on integers.
constexpr unsigned ceil_log2(std::uint64_t n) noexcept {
  return n <= 1 ? 0U : static_cast<unsigned>(std::bit_width(n - 1));
}

/// Bytes per stored permutation: ceil(2^ceil(log2(x + y)) / 8).
inline BigCount bytes_per_permutation(std::uint64_t x, std::uint64_t y) {
  if (x + y == 0) throw undefined_log("storage is undefined for two empty sets (log2 of 0)");
  const BigCount bits = BigCount{1} << ceil_log2(x + y);
  return (bits + 7) / 8;
}

inline BigCount storage_bytes(std::uint64_t x, std::uint64_t y) {
  return shuffle_count(x, y) * bytes_per_permutation(x, y);
}

}  // namespace shuffle::formulas
