#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace revmatch {

/// Largest supported circuit width. A pattern lives in a single machine word.
inline constexpr std::size_t kMaxWidth = 64;

/// Mask with the low `width` bits set.
constexpr std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Fixed-width bit pattern. Wire 0 is the least significant bit of value().
class BitVec {
 public:
  /// Throws std::invalid_argument when width is outside [1, kMaxWidth] or
  /// `value` has bits at or above `width`.
  explicit BitVec(std::size_t width, std::uint64_t value = 0);

  static BitVec from_bits(const std::vector<bool>& bits);

  std::size_t width() const { return width_; }
  std::uint64_t value() const { return value_; }

  bool operator[](std::size_t wire) const { return (value_ >> wire) & 1U; }
  bool get(std::size_t wire) const;
  BitVec with(std::size_t wire, bool bit) const;
  BitVec flipped(std::size_t wire) const;
  std::size_t popcount() const;

  BitVec operator^(const BitVec& other) const;
  bool operator==(const BitVec& other) const = default;

  /// Wire 0 first, e.g. "010" for wires (0,1,0).
  std::string to_string() const;
  std::vector<bool> bits() const;

 private:
  std::size_t width_;
  std::uint64_t value_;
};

}  // namespace revmatch
