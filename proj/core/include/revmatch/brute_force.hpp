#pragma once

#include <cstdint>
#include <optional>

#include "revmatch/circuit.hpp"
#include "revmatch/equivalence.hpp"

namespace revmatch {

struct BruteForceOptions {
  /// Truth-table width limit. Negation-only sides scale as 2^n per side; a
  /// permutation side is a factorial search and is only practical well below
  /// this limit unless the circuits prune early.
  std::size_t max_width = kDefaultTruthTableLimit;
};

struct BruteForceStats {
  std::uint64_t nodes = 0;        // partial input-side assignments visited
  std::uint64_t rows_checked = 0; // truth-table rows compared
};

/// Exhaustive search for a witness of `equiv` with white-box access to both
/// circuits. Input-side candidates (negation masks and wire permutations) are
/// enumerated wire by wire; the output-side witness is derived from per-wire
/// agreement masks, and branches are cut only when no output-side witness can
/// exist. Returns the first witness found, or nullopt when none exists.
///
/// Throws std::invalid_argument when the width exceeds options.max_width.
std::optional<MatchWitness> brute_force_match(const Circuit& c1, const Circuit& c2, EquivType equiv,
                                              BruteForceOptions options = {},
                                              BruteForceStats* stats = nullptr);

}  // namespace revmatch
