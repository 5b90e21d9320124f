#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "revmatch/circuit.hpp"
#include "revmatch/qsim.hpp"

namespace revmatch {

class InverseUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QueryCounts {
  std::uint64_t classical = 0;
  std::uint64_t inverse = 0;
  std::uint64_t quantum = 0;

  std::uint64_t total() const { return classical + inverse + quantum; }
  bool operator==(const QueryCounts&) const = default;
};

/// Black-box access to a reversible circuit. Matchers see the circuit only
/// through the query operations, each of which is counted. Counters are
/// atomic, so concurrent queries never lose counts.
class Oracle {
 public:
  /// When an inverse is supplied it is checked against `forward`: exhaustively
  /// up to 10 wires, on 256 sampled inputs above that. Throws
  /// std::invalid_argument on mismatch.
  explicit Oracle(Circuit forward, std::optional<Circuit> inverse = std::nullopt);

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  std::size_t width() const { return forward_.width(); }
  bool has_inverse() const { return inverse_.has_value(); }

  BitVec query(const BitVec& x);
  /// Throws InverseUnavailable when no inverse circuit was supplied.
  BitVec query_inverse(const BitVec& x);
  /// One quantum query runs the whole superposition through the circuit.
  SparseState query_state(const SparseState& s);

  QueryCounts counts() const;
  void reset_counts();

 private:
  Circuit forward_;
  std::optional<Circuit> inverse_;
  std::atomic<std::uint64_t> classical_{0};
  std::atomic<std::uint64_t> inverse_queries_{0};
  std::atomic<std::uint64_t> quantum_{0};
};

}  // namespace revmatch
