#include "revmatch/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace revmatch {

BitVec::BitVec(std::size_t width, std::uint64_t value) : width_(width), value_(value) {
  if (width == 0 || width > kMaxWidth) {
    throw std::invalid_argument("BitVec width must be in [1, 64], got " + std::to_string(width));
  }
  if ((value & ~low_mask(width)) != 0) {
    throw std::invalid_argument("BitVec value has bits beyond width " + std::to_string(width));
  }
}

BitVec BitVec::from_bits(const std::vector<bool>& bits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits.size() && i < kMaxWidth; ++i) {
    if (bits[i]) value |= std::uint64_t{1} << i;
  }
  return BitVec(bits.size(), value);
}

bool BitVec::get(std::size_t wire) const {
  if (wire >= width_) throw std::out_of_range("BitVec wire " + std::to_string(wire) + " out of range");
  return (*this)[wire];
}

BitVec BitVec::with(std::size_t wire, bool bit) const {
  if (wire >= width_) throw std::out_of_range("BitVec wire " + std::to_string(wire) + " out of range");
  const std::uint64_t m = std::uint64_t{1} << wire;
  return BitVec(width_, bit ? (value_ | m) : (value_ & ~m));
}

BitVec BitVec::flipped(std::size_t wire) const { return with(wire, !get(wire)); }

std::size_t BitVec::popcount() const { return static_cast<std::size_t>(std::popcount(value_)); }

BitVec BitVec::operator^(const BitVec& other) const {
  if (other.width_ != width_) throw std::invalid_argument("BitVec width mismatch in xor");
  return BitVec(width_, value_ ^ other.value_);
}

std::string BitVec::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

std::vector<bool> BitVec::bits() const {
  std::vector<bool> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = (*this)[i];
  return out;
}

}  // namespace revmatch
