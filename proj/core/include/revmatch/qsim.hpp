#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "revmatch/circuit.hpp"

namespace revmatch {

class Rng;

enum class WireInit : std::uint8_t { Zero, One, Plus, Minus };

/// Largest support a state may hold.
inline constexpr std::size_t kMaxStateSupport = std::size_t{1} << 22;

/// Uniform-magnitude superposition over a set of basis patterns with +/-1
/// signs. Products of |0>, |1>, |+>, |-> stay in this class under permutation
/// circuits, so the simulation is exact.
class SparseState {
 public:
  struct Term {
    std::uint64_t basis;
    std::int8_t sign;  // +1 or -1

    bool operator==(const Term&) const = default;
  };

  /// Plus/Minus wires are free, Zero/One wires fixed. sign(x) is (-1) raised to
  /// the number of Minus wires on which x reads 1.
  static SparseState prepare(std::span<const WireInit> inits);

  std::size_t width() const { return width_; }
  std::size_t support_size() const { return terms_.size(); }
  /// Sorted by basis.
  const std::vector<Term>& terms() const { return terms_; }
  /// +1 / -1 for support members, 0 otherwise.
  int sign_of(std::uint64_t basis) const;

  bool operator==(const SparseState&) const = default;

 private:
  SparseState(std::size_t width, std::vector<Term> terms) : width_(width), terms_(std::move(terms)) {}
  friend SparseState apply_circuit(const Circuit& c, const SparseState& s);

  std::size_t width_;
  std::vector<Term> terms_;
};

/// Maps every basis pattern through the circuit and carries its sign.
SparseState apply_circuit(const Circuit& c, const SparseState& s);

/// Exact form of <s1|s2> = signed_sum / sqrt(size1 * size2).
struct Overlap {
  std::int64_t signed_sum = 0;
  std::uint64_t size1 = 0;
  std::uint64_t size2 = 0;

  double value() const;
  double squared() const;
  bool operator==(const Overlap&) const = default;
};

Overlap overlap(const SparseState& s1, const SparseState& s2);
double inner_product(const SparseState& s1, const SparseState& s2);
/// |<s1|s2>| == 1.
bool equal_up_to_global_sign(const SparseState& s1, const SparseState& s2);

/// Probability that the swap test measures 1: 1/2 - |<s1|s2>|^2 / 2.
double swap_test_one_probability(const SparseState& s1, const SparseState& s2);
/// Samples one swap-test outcome.
int swap_test(const SparseState& s1, const SparseState& s2, Rng& rng);

}  // namespace revmatch
