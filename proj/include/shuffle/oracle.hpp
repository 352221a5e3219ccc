#pragma once

// Brute-force reference generators used to check the shift/subtract walk.
// They are deliberately naive and independent of core's traversal logic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "shuffle/core.hpp"

namespace shuffle::oracle {

inline constexpr unsigned kScanMaxWidth = 30;
inline constexpr unsigned kLexMaxWidth = 40;

class oracle_too_large : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct VerificationReport {
  ShuffleSpec spec;
  std::uint64_t algorithm_count{0};
  std::uint64_t oracle_count{0};
  std::vector<Bitmask> missing;
  std::vector<Bitmask> extra;
  std::vector<Bitmask> duplicates;
  bool passed{false};
};

namespace detail {

inline void require_width(const ShuffleSpec& spec, unsigned limit, const char* name) {
  spec.require_fits();
  if (spec.width() > limit) {
    throw oracle_too_large(std::string(name) + " oracle limited to width " +
                           std::to_string(limit) + ", got " + std::to_string(spec.width()));
  }
}

}  // namespace detail

/// Every integer below 2^width with exactly `ones` bits set, found by testing
/// each candidate in [2^ones - 1, 2^width).
inline std::vector<Bitmask> scan_enumerate(const ShuffleSpec& spec) {
  detail::require_width(spec, kScanMaxWidth, "scan");
  std::vector<Bitmask> out;
  const std::uint64_t end = std::uint64_t{1} << spec.width();
  for (std::uint64_t p = (std::uint64_t{1} << spec.ones) - 1; p < end; ++p) {
    if (static_cast<unsigned>(std::popcount(p)) == spec.ones) out.push_back(Bitmask{p});
  }
  return out;
}

/// Same output as scan_enumerate, stepping directly to the next larger
/// integer with equal popcount (Gosper's hack).
inline std::vector<Bitmask> lex_enumerate(const ShuffleSpec& spec) {
  detail::require_width(spec, kLexMaxWidth, "lex");
  if (spec.ones == 0) return {Bitmask{0}};
  std::vector<Bitmask> out;
  std::uint64_t p = (std::uint64_t{1} << spec.ones) - 1;
  const std::uint64_t last = p << spec.zeros;
  for (;;) {
    out.push_back(Bitmask{p});
    if (p == last) break;
    const std::uint64_t lowest = p & (~p + 1);
    const std::uint64_t ripple = p + lowest;
    p = ripple | (((p ^ ripple) >> 2) / lowest);
  }
  return out;
}

inline Bitmask complement_mask(const ShuffleSpec& spec) { return Bitmask{spec.full_mask()}; }

inline std::vector<Bitmask> collect(const ShuffleSpec& spec) {
  std::vector<Bitmask> values;
  enumerate(spec, [&](const EnumerationEvent& e) { values.push_back(e.value); });
  return values;
}

inline std::vector<Bitmask> xor_all(std::vector<Bitmask> values, Bitmask mask) {
  for (auto& v : values) v.value ^= mask.value;
  return values;
}

/// Enumerates (zeros, ones) and (ones, zeros); complementing the first output
/// within the significant region must reproduce the second as a set.
inline bool verify_swap_isomorphism(const ShuffleSpec& spec) {
  auto complemented = xor_all(collect(spec), complement_mask(spec));
  auto swapped = collect(ShuffleSpec{spec.ones, spec.zeros});
  std::ranges::sort(complemented);
  std::ranges::sort(swapped);
  return complemented == swapped;
}

/// Compares a produced multiset against a sorted, duplicate-free reference.
inline VerificationReport compare(const ShuffleSpec& spec, std::vector<Bitmask> produced,
                                  const std::vector<Bitmask>& reference) {
  VerificationReport report;
  report.spec = spec;
  report.algorithm_count = produced.size();
  report.oracle_count = reference.size();

  std::ranges::sort(produced);
  std::vector<Bitmask> unique;
  for (std::size_t k = 0; k < produced.size(); ++k) {
    if (k > 0 && produced[k] == produced[k - 1]) {
      if (report.duplicates.empty() || report.duplicates.back() != produced[k]) {
        report.duplicates.push_back(produced[k]);
      }
    } else {
      unique.push_back(produced[k]);
    }
  }
  std::ranges::set_difference(reference, unique, std::back_inserter(report.missing));
  std::ranges::set_difference(unique, reference, std::back_inserter(report.extra));

  report.passed = report.missing.empty() && report.extra.empty() &&
                  report.duplicates.empty() && report.algorithm_count == report.oracle_count;
  return report;
}

inline VerificationReport verify_against_oracle(const ShuffleSpec& spec) {
  return compare(spec, collect(spec), scan_enumerate(spec));
}

inline VerificationReport verify_against_lex(const ShuffleSpec& spec) {
  return compare(spec, collect(spec), lex_enumerate(spec));
}

}  // namespace shuffle::oracle
