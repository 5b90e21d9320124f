#pragma once

#include <cstdint>
#include <vector>

#include "revmatch/circuit.hpp"
#include "revmatch/equivalence.hpp"

namespace revmatch::testing_support {

// Straight-line evaluation from the gate definitions, kept separate from the
// mask-based evaluator in the library.
inline std::vector<bool> reference_eval(const Circuit& c, std::vector<bool> bits) {
  for (const CircuitElement& e : c.elements()) {
    if (const auto* g = std::get_if<MctGate>(&e)) {
      bool fire = true;
      for (const ControlLine& cl : g->controls()) {
        const bool want = cl.polarity == Polarity::Positive;
        if (bits[cl.wire] != want) fire = false;
      }
      if (fire) bits[g->target()] = !bits[g->target()];
    } else {
      const auto& map = std::get<Rewire>(e).map;
      std::vector<bool> moved(bits.size());
      for (std::size_t i = 0; i < bits.size(); ++i) moved[map(i)] = bits[i];
      bits = moved;
    }
  }
  return bits;
}

inline std::vector<bool> to_bits(std::uint64_t x, std::size_t n) {
  std::vector<bool> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (x >> i) & 1U;
  return b;
}

inline std::uint64_t from_bits(const std::vector<bool>& b) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < b.size(); ++i) x |= std::uint64_t{b[i]} << i;
  return x;
}

inline std::uint64_t reference_apply(const Circuit& c, std::uint64_t x) {
  return from_bits(reference_eval(c, to_bits(x, c.width())));
}

// C1 == C_Y C2 C_X, computed from the witness definitions bit by bit.
inline bool reference_witness_holds(const Circuit& c1, const Circuit& c2, const MatchWitness& w) {
  const std::size_t n = c1.width();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::vector<bool> b = to_bits(x, n);
    if (w.nu_x) for (std::size_t i = 0; i < n; ++i) b[i] = b[i] != (*w.nu_x)(i);
    if (w.pi_x) {
      std::vector<bool> m(n);
      for (std::size_t i = 0; i < n; ++i) m[(*w.pi_x)(i)] = b[i];
      b = m;
    }
    b = reference_eval(c2, b);
    if (w.nu_y) for (std::size_t i = 0; i < n; ++i) b[i] = b[i] != (*w.nu_y)(i);
    if (w.pi_y) {
      std::vector<bool> m(n);
      for (std::size_t i = 0; i < n; ++i) m[(*w.pi_y)(i)] = b[i];
      b = m;
    }
    if (from_bits(b) != reference_apply(c1, x)) return false;
  }
  return true;
}

inline Circuit fig2_circuit() {
  Circuit c(3);
  c.add_gate(2, {{0, Polarity::Positive}, {1, Polarity::Negative}});
  c.add_gate(1);
  return c;
}

}  // namespace revmatch::testing_support
