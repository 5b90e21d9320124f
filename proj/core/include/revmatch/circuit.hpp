#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "revmatch/bitvec.hpp"
#include "revmatch/maps.hpp"

namespace revmatch {

enum class Polarity : std::uint8_t { Positive, Negative };

struct ControlLine {
  std::size_t wire;
  Polarity polarity = Polarity::Positive;

  bool operator==(const ControlLine&) const = default;
};

/// Multiple-controlled Toffoli gate. The target flips iff every positive
/// control reads 1 and every negative control reads 0. Zero controls is a NOT.
class MctGate {
 public:
  /// Throws std::invalid_argument on a repeated control wire or a control on
  /// the target wire.
  MctGate(std::size_t target, std::vector<ControlLine> controls = {});

  static MctGate not_gate(std::size_t target) { return MctGate(target); }
  static MctGate cnot(std::size_t control, std::size_t target) {
    return MctGate(target, {{control, Polarity::Positive}});
  }

  std::size_t target() const { return target_; }
  const std::vector<ControlLine>& controls() const { return controls_; }
  /// Highest wire index touched by the gate.
  std::size_t max_wire() const;

  std::uint64_t apply(std::uint64_t x) const {
    return (x & care_) == fire_ ? x ^ (std::uint64_t{1} << target_) : x;
  }

  bool operator==(const MctGate& other) const {
    return target_ == other.target_ && controls_ == other.controls_;
  }

 private:
  std::size_t target_;
  std::vector<ControlLine> controls_;
  std::uint64_t care_ = 0;  // bits of every control wire
  std::uint64_t fire_ = 0;  // bits of the positive control wires
};

/// Primitive wire permutation; the value on wire i moves to wire map(i).
struct Rewire {
  PermutationMap map;

  bool operator==(const Rewire&) const = default;
};

using CircuitElement = std::variant<MctGate, Rewire>;

/// Reversible circuit: elements applied left to right on `width` wires.
class Circuit {
 public:
  explicit Circuit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<CircuitElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  /// Number of MCT elements (Rewire elements are not gates).
  std::size_t gate_count() const;

  /// Throws std::invalid_argument if the element touches a wire >= width.
  Circuit& add(CircuitElement element);
  Circuit& add_gate(std::size_t target, std::vector<ControlLine> controls = {}) {
    return add(MctGate(target, std::move(controls)));
  }
  Circuit& append(const Circuit& other);

  /// Unchecked evaluation on the integer encoding.
  std::uint64_t apply(std::uint64_t x) const;
  BitVec eval(const BitVec& x) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t width_;
  std::vector<CircuitElement> elements_;
};

inline constexpr std::size_t kDefaultTruthTableLimit = 16;

/// Reversed element order; every MCT gate is self-inverse, Rewire(pi) becomes Rewire(pi^-1).
Circuit invert(const Circuit& c);
/// `a` then `b`: eval(compose(a, b), x) == eval(b, eval(a, x)).
Circuit compose(const Circuit& a, const Circuit& b);
/// One NOT per negated wire.
Circuit neg_circuit(const NegationMap& nu);
/// A single Rewire element.
Circuit perm_circuit(const PermutationMap& pi);

/// Returns nu' with (apply nu, then pi) == (apply pi, then nu'), i.e. nu'(pi(i)) = nu(i).
NegationMap commute_neg_perm(const NegationMap& nu, const PermutationMap& pi);

/// Output pattern for every input 0 .. 2^width - 1.
std::vector<std::uint64_t> truth_table(const Circuit& c, std::size_t limit = kDefaultTruthTableLimit);
bool is_bijection(std::span<const std::uint64_t> table);
bool functionally_equal(const Circuit& a, const Circuit& b, std::size_t limit = kDefaultTruthTableLimit);

struct RandomCircuitOptions {
  std::size_t max_controls = 4;
};

/// Deterministic for a fixed seed. Each gate draws a uniform target, a control
/// count in [0, min(width-1, max_controls)], distinct control wires and random
/// polarities.
Circuit random_circuit(std::size_t width, std::size_t gate_count, std::uint64_t seed,
                       RandomCircuitOptions options = {});

}  // namespace revmatch
