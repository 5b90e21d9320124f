#include "revmatch/maps.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "revmatch/random.hpp"

namespace revmatch {

NegationMap::NegationMap(std::size_t width, std::uint64_t mask) : width_(width), mask_(mask) {
  if (width == 0 || width > kMaxWidth) throw std::invalid_argument("NegationMap width out of range");
  if ((mask & ~low_mask(width)) != 0) throw std::invalid_argument("NegationMap mask exceeds width");
}

NegationMap NegationMap::from_flags(const std::vector<int>& flags) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] != 0 && flags[i] != 1) throw std::invalid_argument("negation flag must be 0 or 1");
    if (flags[i] && i < kMaxWidth) mask |= std::uint64_t{1} << i;
  }
  return NegationMap(flags.size(), mask);
}

NegationMap NegationMap::random(std::size_t width, Rng& rng) {
  return NegationMap(width, rng.bits(width));
}

bool NegationMap::operator()(std::size_t wire) const {
  if (wire >= width_) throw std::out_of_range("NegationMap wire out of range");
  return (mask_ >> wire) & 1U;
}

std::vector<int> NegationMap::flags() const {
  std::vector<int> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = static_cast<int>((mask_ >> i) & 1U);
  return out;
}

BitVec NegationMap::apply(const BitVec& x) const {
  if (x.width() != width_) throw std::invalid_argument("NegationMap width mismatch");
  return BitVec(width_, apply(x.value()));
}

PermutationMap::PermutationMap(std::vector<std::size_t> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0 || n > kMaxWidth) throw std::invalid_argument("PermutationMap width out of range");
  std::vector<bool> seen(n, false);
  for (std::size_t img : images_) {
    if (img >= n) throw std::invalid_argument("PermutationMap image " + std::to_string(img) + " out of range");
    if (seen[img]) throw std::invalid_argument("PermutationMap is not a bijection (image " + std::to_string(img) + " repeated)");
    seen[img] = true;
  }
}

PermutationMap PermutationMap::identity(std::size_t width) {
  std::vector<std::size_t> images(width);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::transposition(std::size_t width, std::size_t a, std::size_t b) {
  std::vector<std::size_t> images(width);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::swap(images.at(a), images.at(b));
  return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::rotation(std::size_t width, long shift) {
  std::vector<std::size_t> images(width);
  const long n = static_cast<long>(width);
  for (long i = 0; i < n; ++i) images[i] = static_cast<std::size_t>(((i + shift) % n + n) % n);
  return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::random(std::size_t width, Rng& rng) {
  std::vector<std::size_t> images(width);
  std::iota(images.begin(), images.end(), std::size_t{0});
  for (std::size_t i = width; i > 1; --i) {
    std::swap(images[i - 1], images[rng.below(i)]);
  }
  return PermutationMap(std::move(images));
}

bool PermutationMap::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

PermutationMap PermutationMap::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return PermutationMap(std::move(inv));
}

PermutationMap PermutationMap::then(const PermutationMap& next) const {
  if (next.width() != width()) throw std::invalid_argument("PermutationMap width mismatch");
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next.images_[images_[i]];
  return PermutationMap(std::move(out));
}

std::uint64_t PermutationMap::apply(std::uint64_t x) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out |= ((x >> i) & 1U) << images_[i];
  }
  return out;
}

BitVec PermutationMap::apply(const BitVec& x) const {
  if (x.width() != width()) throw std::invalid_argument("PermutationMap width mismatch");
  return BitVec(width(), apply(x.value()));
}

std::string to_string(const NegationMap& nu) {
  std::string out;
  for (int f : nu.flags()) out.push_back(f ? '1' : '0');
  return out;
}

std::string to_string(const PermutationMap& pi) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pi.width(); ++i) os << (i ? " " : "") << pi(i);
  os << ']';
  return os.str();
}

}  // namespace revmatch
