#include "revmatch/oracle.hpp"

#include <string>

#include "revmatch/random.hpp"

namespace revmatch {

namespace {

constexpr std::size_t kExhaustiveInverseCheck = 10;
constexpr std::size_t kInverseSamples = 256;

void check_inverse(const Circuit& forward, const Circuit& inverse) {
  if (inverse.width() != forward.width()) throw std::invalid_argument("inverse circuit width mismatch");
  auto ok = [&](std::uint64_t x) { return inverse.apply(forward.apply(x)) == x; };
  if (forward.width() <= kExhaustiveInverseCheck) {
    const std::uint64_t rows = std::uint64_t{1} << forward.width();
    for (std::uint64_t x = 0; x < rows; ++x) {
      if (!ok(x)) throw std::invalid_argument("supplied inverse does not invert the circuit");
    }
    return;
  }
  Rng rng(0x5eed1e55);
  for (std::size_t i = 0; i < kInverseSamples; ++i) {
    if (!ok(rng.bits(forward.width()))) throw std::invalid_argument("supplied inverse does not invert the circuit");
  }
}

}  // namespace

Oracle::Oracle(Circuit forward, std::optional<Circuit> inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (inverse_) check_inverse(forward_, *inverse_);
}

BitVec Oracle::query(const BitVec& x) {
  BitVec y = forward_.eval(x);
  classical_.fetch_add(1, std::memory_order_relaxed);
  return y;
}

BitVec Oracle::query_inverse(const BitVec& x) {
  if (!inverse_) throw InverseUnavailable("inverse circuit not available");
  BitVec y = inverse_->eval(x);
  inverse_queries_.fetch_add(1, std::memory_order_relaxed);
  return y;
}

SparseState Oracle::query_state(const SparseState& s) {
  SparseState out = apply_circuit(forward_, s);
  quantum_.fetch_add(1, std::memory_order_relaxed);
  return out;
}

QueryCounts Oracle::counts() const {
  return {classical_.load(std::memory_order_relaxed), inverse_queries_.load(std::memory_order_relaxed),
          quantum_.load(std::memory_order_relaxed)};
}

void Oracle::reset_counts() {
  classical_.store(0);
  inverse_queries_.store(0);
  quantum_.store(0);
}

}  // namespace revmatch
