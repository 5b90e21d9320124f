#pragma once

#include <cstdint>
#include <random>

namespace revmatch {

// Engine-level draws are spelled out here instead of using the <random>
// distributions, whose outputs differ between standard libraries. Seeds must
// reproduce byte-identical instances and reports everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % bound;
  }

  /// Uniform pattern over the low `width` bits.
  std::uint64_t bits(std::size_t width) {
    const std::uint64_t draw = engine_();
    return width >= 64 ? draw : draw & ((std::uint64_t{1} << width) - 1);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Derive an independent stream for sub-task `index`.
  Rng split(std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(engine_()),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    Rng child(0);
    child.engine_.seed(seq);
    return child;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace revmatch
