#pragma once

// Shuffle-product enumeration of two homogeneous sets.
//
// A permutation is an unsigned 64-bit integer whose low zeros+ones bits (the
// significant region) hold `ones` set bits. Enumeration starts from the
// smallest such integer (all 1s packed to the right) and walks a tree of
// shift (double) and subtract steps, each of which lands on a new valid
// permutation.

#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shuffle {

inline constexpr unsigned kMaxWidth = 64;

class instance_too_large : public std::length_error {
 public:
  using std::length_error::length_error;
};

class subtraction_underflow : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Bitmask {
  std::uint64_t value{0};

  friend constexpr auto operator<=>(const Bitmask&, const Bitmask&) = default;
};

struct Subtrahend {
  std::uint64_t value{0};

  friend constexpr auto operator<=>(const Subtrahend&, const Subtrahend&) = default;
};

/// One problem instance: `zeros` elements encoded as 0 bits, `ones` as 1 bits.
struct ShuffleSpec {
  unsigned zeros{0};
  unsigned ones{0};

  constexpr unsigned width() const noexcept { return zeros + ones; }

  constexpr bool fits() const noexcept {
    // guard against unsigned wrap in zeros + ones
    return zeros <= kMaxWidth && ones <= kMaxWidth && width() <= kMaxWidth;
  }

  /// 2^width - 1; the whole 64-bit word when width == 64.
  constexpr std::uint64_t full_mask() const {
    require_fits();
    return width() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width()) - 1;
  }

  constexpr void require_fits() const {
    if (!fits()) {
      throw instance_too_large("instance too large: zeros + ones = " +
                               std::to_string(std::uint64_t{zeros} + ones) +
                               " exceeds " + std::to_string(kMaxWidth) + " bits");
    }
  }

  friend constexpr bool operator==(const ShuffleSpec&, const ShuffleSpec&) = default;
};

enum class EdgeKind { Root, Shift, Subtract };

constexpr std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Root: return "root";
    case EdgeKind::Shift: return "shift";
    case EdgeKind::Subtract: return "subtract";
  }
  return "unknown";
}

struct EnumerationEvent {
  std::uint64_t index{0};
  Bitmask value;
  std::optional<std::uint64_t> parent_index;
  EdgeKind edge{EdgeKind::Root};
  // Meaningful on Subtract edges only.
  std::optional<Subtrahend> subtrahend_used;
  unsigned shift_count{0};
  unsigned subtract_count{0};

  friend bool operator==(const EnumerationEvent&, const EnumerationEvent&) = default;
};

constexpr Bitmask initial_permutation(const ShuffleSpec& spec) {
  spec.require_fits();
  if (spec.ones == 64) return Bitmask{~std::uint64_t{0}};
  return Bitmask{(std::uint64_t{1} << spec.ones) - 1};
}

constexpr Bitmask shift_step(Bitmask p) noexcept { return Bitmask{p.value << 1}; }

constexpr Bitmask subtract_step(Bitmask p, Subtrahend v) {
  if (v.value > p.value) {
    throw subtraction_underflow("subtrahend " + std::to_string(v.value) +
                                " exceeds permutation " + std::to_string(p.value));
  }
  return Bitmask{p.value - v.value};
}

constexpr Subtrahend advance_subtrahend_on_shift(Subtrahend v) noexcept {
  return Subtrahend{(v.value << 1) + 1};
}

// Pure doubling. Adding 1 here as well (as a literal reading of the shift
// rule would suggest) breaks popcount on the second subtraction: 61 - 3 = 58.
constexpr Subtrahend advance_subtrahend_on_subtract(Subtrahend v) noexcept {
  return Subtrahend{v.value << 1};
}

constexpr bool is_valid_permutation(Bitmask p, const ShuffleSpec& spec) noexcept {
  if (!spec.fits()) return false;
  const bool in_region =
      spec.width() == 64 || (p.value >> spec.width()) == 0;
  return in_region && static_cast<unsigned>(std::popcount(p.value)) == spec.ones;
}

/// Zero-padded binary rendering of `p` over `width` bits, most significant first.
inline std::string to_binary(std::uint64_t p, unsigned width) {
  std::string out(width, '0');
  for (unsigned bit = 0; bit < width; ++bit) {
    if ((p >> bit) & 1U) out[width - 1 - bit] = '1';
  }
  return out;
}

/// Binary rendering without leading zeros ("0" for zero).
inline std::string to_binary(std::uint64_t p) {
  return p == 0 ? std::string("0") : to_binary(p, static_cast<unsigned>(std::bit_width(p)));
}

template <typename V>
concept EventVisitor = std::invocable<V&, const EnumerationEvent&>;

namespace detail {

template <EventVisitor Visitor>
class Walker {
 public:
  Walker(const ShuffleSpec& spec, Visitor& visitor) : spec_(spec), visitor_(visitor) {}

  std::uint64_t run() {
    const Bitmask root = initial_permutation(spec_);
    emit(root, std::nullopt, EdgeKind::Root, std::nullopt, 0, 0);
    if (spec_.zeros > 0 && spec_.ones > 0) shift(root, 0, Subtrahend{0}, 0, 0);
    return next_index_;
  }

 private:
  // Each loop iteration replaces p with its child, so successive children in
  // one frame form a chain: each is the parent of the next.
  void shift(Bitmask p, std::uint64_t node, Subtrahend v, unsigned i, unsigned j) {
    while (i < spec_.zeros) {
      p = shift_step(p);
      ++i;
      node = emit(p, node, EdgeKind::Shift, std::nullopt, i, j);
      v = advance_subtrahend_on_shift(v);
      subtract(p, node, v, i, j);
    }
  }

  void subtract(Bitmask p, std::uint64_t node, Subtrahend v, unsigned i, unsigned j) {
    while (j + 1 < spec_.ones) {
      p = subtract_step(p, v);
      ++j;
      node = emit(p, node, EdgeKind::Subtract, v, i, j);
      v = advance_subtrahend_on_subtract(v);
      shift(p, node, v, i, j);
    }
  }

  std::uint64_t emit(Bitmask p, std::optional<std::uint64_t> parent, EdgeKind edge,
                     std::optional<Subtrahend> v, unsigned i, unsigned j) {
    const std::uint64_t index = next_index_++;
    visitor_(EnumerationEvent{index, p, parent, edge, v, i, j});
    return index;
  }

  const ShuffleSpec& spec_;
  Visitor& visitor_;
  std::uint64_t next_index_{0};
};

}  // namespace detail

/// Emits every element of the shuffle product exactly once, in traversal
/// pre-order, starting with the initial permutation. Returns the number of
/// events emitted. Specs with an empty side emit the root only.
template <EventVisitor Visitor>
std::uint64_t enumerate(const ShuffleSpec& spec, Visitor&& visitor) {
  spec.require_fits();
  detail::Walker<std::remove_reference_t<Visitor>> walker(spec, visitor);
  return walker.run();
}

/// Visitor that only counts.
struct CountingVisitor {
  std::uint64_t count{0};
  void operator()(const EnumerationEvent&) noexcept { ++count; }
};

}  // namespace shuffle
