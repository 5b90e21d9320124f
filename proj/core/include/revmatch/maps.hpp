#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "revmatch/bitvec.hpp"

namespace revmatch {

class Rng;

/// Negation witness: flag(i) set means wire i is inverted.
class NegationMap {
 public:
  explicit NegationMap(std::size_t width, std::uint64_t mask = 0);
  static NegationMap from_flags(const std::vector<int>& flags);
  static NegationMap random(std::size_t width, Rng& rng);

  std::size_t width() const { return width_; }
  std::uint64_t mask() const { return mask_; }
  bool operator()(std::size_t wire) const;
  std::vector<int> flags() const;
  bool is_identity() const { return mask_ == 0; }

  std::uint64_t apply(std::uint64_t x) const { return x ^ mask_; }
  BitVec apply(const BitVec& x) const;

  bool operator==(const NegationMap&) const = default;

 private:
  std::size_t width_;
  std::uint64_t mask_;
};

/// Permutation witness: image(i) = j means the value on wire i moves to wire j.
class PermutationMap {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on
  /// {0, ..., images.size()-1}.
  explicit PermutationMap(std::vector<std::size_t> images);
  static PermutationMap identity(std::size_t width);
  static PermutationMap transposition(std::size_t width, std::size_t a, std::size_t b);
  /// i -> i + shift (mod width); negative shifts rotate the other way.
  static PermutationMap rotation(std::size_t width, long shift);
  static PermutationMap random(std::size_t width, Rng& rng);

  std::size_t width() const { return images_.size(); }
  std::size_t operator()(std::size_t wire) const { return images_.at(wire); }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;

  PermutationMap inverse() const;
  /// Map equivalent to applying *this first, then `next`.
  PermutationMap then(const PermutationMap& next) const;

  std::uint64_t apply(std::uint64_t x) const;
  BitVec apply(const BitVec& x) const;

  bool operator==(const PermutationMap&) const = default;

 private:
  std::vector<std::size_t> images_;
};

std::string to_string(const NegationMap& nu);
std::string to_string(const PermutationMap& pi);

}  // namespace revmatch
