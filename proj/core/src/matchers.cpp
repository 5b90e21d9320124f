#include "revmatch/matchers.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "revmatch/random.hpp"

namespace revmatch {

namespace {

using Fn = std::function<std::uint64_t(std::uint64_t)>;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Query access to one side of the problem. `backward` is empty when the
// inverse circuit is not available.
struct Access {
  std::size_t width;
  Fn forward;
  Fn backward;
};

Access access(Oracle& o) {
  const std::size_t n = o.width();
  Access a{n, [&o, n](std::uint64_t x) { return o.query(BitVec(n, x)).value(); }, {}};
  if (o.has_inverse()) {
    a.backward = [&o, n](std::uint64_t x) { return o.query_inverse(BitVec(n, x)).value(); };
  }
  return a;
}

// The inverse circuit seen as the black box; its inverse is the forward circuit.
Access reversed(Oracle& o) {
  const std::size_t n = o.width();
  return {n, [&o, n](std::uint64_t x) { return o.query_inverse(BitVec(n, x)).value(); },
          [&o, n](std::uint64_t x) { return o.query(BitVec(n, x)).value(); }};
}

// C_nu . C as a virtual oracle. Post-processing is free: no extra queries.
Access negate_outputs(const Access& a, std::uint64_t mask) {
  Access out{a.width, [f = a.forward, mask](std::uint64_t x) { return f(x) ^ mask; }, {}};
  if (a.backward) {
    out.backward = [b = a.backward, mask](std::uint64_t y) { return b(y ^ mask); };
  }
  return out;
}

void require_same_width(const Oracle& o1, const Oracle& o2) {
  if (o1.width() != o2.width()) throw std::invalid_argument("oracle width mismatch");
}

std::uint64_t one_hot(std::size_t i) { return std::uint64_t{1} << i; }

// Recovers sigma from g(x) = sigma(x) xor offset. Pattern t feeds wire j the
// t-th bit of j's binary code, so the code read back on output wire q names
// the input wire that landed there.
PermutationMap decode_binary_codes(std::size_t n, const Fn& g, std::uint64_t offset) {
  const std::size_t patterns = binary_code_patterns(n);
  std::vector<std::uint64_t> codes(n, 0);
  for (std::size_t t = 0; t < patterns; ++t) {
    std::uint64_t in = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((j >> t) & 1U) in |= one_hot(j);
    }
    const std::uint64_t out = g(in) ^ offset;
    for (std::size_t q = 0; q < n; ++q) codes[q] |= ((out >> q) & 1U) << t;
  }
  std::vector<std::size_t> images(n, kNone);
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t p = codes[q];
    if (p >= n || images[p] != kNone) {
      throw PromiseViolation("binary-code responses do not form a wire permutation");
    }
    images[p] = q;
  }
  return PermutationMap(std::move(images));
}

// g(x) = pi(x xor nu): the all-zero probe gives pi(nu), then the codes give pi.
NegPerm decode_negate_then_permute(std::size_t n, const Fn& g) {
  const std::uint64_t shifted = g(0);
  PermutationMap pi = decode_binary_codes(n, g, shifted);
  return {NegationMap(n, pi.inverse().apply(shifted)), std::move(pi)};
}

// g(x) = pi^-1(x) xor nu: the all-zero probe gives nu directly.
NegPerm decode_inverse_permute_then_negate(std::size_t n, const Fn& g) {
  const std::uint64_t nu = g(0);
  PermutationMap inv = decode_binary_codes(n, g, nu);
  return {NegationMap(n, nu), inv.inverse()};
}

// C1 = C2 C_pi.
PermutationMap solve_p_i_inverse(const Access& c1, const Access& c2) {
  const std::size_t n = c1.width;
  if (c2.backward) {
    return decode_binary_codes(n, [&](std::uint64_t x) { return c2.backward(c1.forward(x)); }, 0);
  }
  if (c1.backward) {
    return decode_binary_codes(n, [&](std::uint64_t x) { return c1.backward(c2.forward(x)); }, 0).inverse();
  }
  throw InverseUnavailable("P-I matching needs the inverse of C1 or C2");
}

PermutationMap solve_p_i_onehot(const Access& c1, const Access& c2) {
  const std::size_t n = c1.width;
  std::unordered_map<std::uint64_t, std::size_t> by_output;  // C1 output of one-hot i -> i
  std::vector<std::uint64_t> c2_outputs(n);
  for (std::size_t i = 0; i < n; ++i) {
    by_output.emplace(c1.forward(one_hot(i)), i);
    c2_outputs[i] = c2.forward(one_hot(i));
  }
  // C1(e_j) = C2(e_pi(j)), so the C1 one-hot that reproduces C2(e_i) is j = pi^-1(i).
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = by_output.find(c2_outputs[i]);
    if (it == by_output.end()) {
      throw MissingKeyError("C2 one-hot output for wire " + std::to_string(i) + " never produced by C1");
    }
    inverse[i] = it->second;
  }
  try {
    return PermutationMap(std::move(inverse)).inverse();
  } catch (const std::invalid_argument&) {
    throw PromiseViolation("one-hot responses do not form a wire permutation");
  }
}

// C1 = C_nu C2 C_pi.
InputPermOutputNeg solve_p_n(const Access& c1, const Access& c2) {
  const std::size_t n = c1.width;
  NegationMap nu(n, c1.forward(0) ^ c2.forward(0));
  const Access c3 = negate_outputs(c2, nu.mask());
  PermutationMap pi = (c1.backward || c3.backward) ? solve_p_i_inverse(c1, c3) : solve_p_i_onehot(c1, c3);
  return {std::move(pi), std::move(nu)};
}

std::vector<WireInit> probe(std::size_t n, std::size_t wire, WireInit special) {
  std::vector<WireInit> inits(n, WireInit::Plus);
  inits[wire] = special;
  return inits;
}

// k rounds of the swap test; true when every round measured 0.
bool states_agree(Oracle& o1, const SparseState& in1, Oracle& o2, const SparseState& in2, std::size_t rounds,
                  Rng& rng) {
  for (std::size_t r = 0; r < rounds; ++r) {
    const SparseState a = o1.query_state(in1);
    const SparseState b = o2.query_state(in2);
    if (swap_test(a, b, rng) == 1) return false;
  }
  return true;
}

struct Sequences {
  std::vector<std::uint64_t> c1;
  std::vector<std::uint64_t> c2;
  std::uint64_t mask;
};

// Feeds the same k random inputs to both oracles; bit r of seq[q] is output
// wire q on round r.
Sequences sample_sequences(Oracle& o1, Oracle& o2, std::size_t k, Rng& rng) {
  const std::size_t n = o1.width();
  if (k > 64) throw std::invalid_argument("random pattern count above 64 is not supported");
  Sequences s{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0), low_mask(k)};
  for (std::size_t r = 0; r < k; ++r) {
    const BitVec x(n, rng.bits(n));
    const std::uint64_t y1 = o1.query(x).value();
    const std::uint64_t y2 = o2.query(x).value();
    for (std::size_t q = 0; q < n; ++q) {
      s.c1[q] |= ((y1 >> q) & 1U) << r;
      s.c2[q] |= ((y2 >> q) & 1U) << r;
    }
  }
  return s;
}

}  // namespace

void MatchConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
}

std::size_t ceil_log2(double x) {
  std::size_t k = 0;
  while (std::ldexp(1.0, static_cast<int>(k)) < x) ++k;
  return k;
}

std::size_t binary_code_patterns(std::size_t n) { return ceil_log2(static_cast<double>(n)); }

std::size_t random_pattern_count(std::size_t n, const MatchConfig& cfg) {
  if (cfg.rounds) return *cfg.rounds;
  cfg.validate();
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return std::max<std::size_t>(1, ceil_log2(pairs / cfg.epsilon));
}

std::size_t n_i_rounds(std::size_t n, const MatchConfig& cfg) {
  if (cfg.rounds) return *cfg.rounds;
  cfg.validate();
  const double per_bit = cfg.budget == FailureBudget::UnionBound ? cfg.epsilon / static_cast<double>(n) : cfg.epsilon;
  return ceil_log2(1.0 / per_bit);
}

std::size_t np_i_rounds(std::size_t n, const MatchConfig& cfg) {
  if (cfg.rounds) return *cfg.rounds;
  cfg.validate();
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const double per_decision = cfg.budget == FailureBudget::UnionBound ? cfg.epsilon / nn : cfg.epsilon;
  return ceil_log2(1.0 / per_decision);
}

NegationMap match_i_n(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  const BitVec zero(o1.width());
  return NegationMap(o1.width(), (o1.query(zero) ^ o2.query(zero)).value());
}

PermutationMap match_i_p_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  const Access c1 = access(o1);
  const Access c2 = access(o2);
  const std::size_t n = o1.width();
  if (c2.backward) {
    // C1 C2^-1 = C_pi
    return decode_binary_codes(n, [&](std::uint64_t x) { return c1.forward(c2.backward(x)); }, 0);
  }
  if (c1.backward) {
    // C2 C1^-1 = C_pi^-1
    return decode_binary_codes(n, [&](std::uint64_t x) { return c2.forward(c1.backward(x)); }, 0).inverse();
  }
  throw InverseUnavailable("I-P matching needs the inverse of C1 or C2");
}

PermutationMap match_i_p_rand(Oracle& o1, Oracle& o2, const MatchConfig& cfg) {
  require_same_width(o1, o2);
  const std::size_t n = o1.width();
  Rng rng(cfg.seed);
  const Sequences s = sample_sequences(o1, o2, random_pattern_count(n, cfg), rng);

  std::unordered_map<std::uint64_t, std::size_t> c2_wire;
  for (std::size_t b = 0; b < n; ++b) {
    if (!c2_wire.emplace(s.c2[b], b).second) throw AmbiguityError("two C2 output bits share a sequence");
  }
  // Output wire pi(b2) of C1 carries output wire b2 of C2.
  std::vector<std::size_t> images(n, kNone);
  for (std::size_t b1 = 0; b1 < n; ++b1) {
    auto it = c2_wire.find(s.c1[b1]);
    if (it == c2_wire.end()) throw PromiseViolation("C1 output sequence matches no C2 output bit");
    if (images[it->second] != kNone) throw AmbiguityError("two C1 output bits share a sequence");
    images[it->second] = b1;
  }
  return PermutationMap(std::move(images));
}

NegPerm match_i_np_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  const Access c1 = access(o1);
  const Access c2 = access(o2);
  const std::size_t n = o1.width();
  if (c2.backward) {
    // C1 C2^-1 = C_pi C_nu
    return decode_negate_then_permute(n, [&](std::uint64_t x) { return c1.forward(c2.backward(x)); });
  }
  if (c1.backward) {
    // C2 C1^-1 = C_nu C_pi^-1
    return decode_inverse_permute_then_negate(n, [&](std::uint64_t x) { return c2.forward(c1.backward(x)); });
  }
  throw InverseUnavailable("I-NP matching needs the inverse of C1 or C2");
}

NegPerm match_i_np_rand(Oracle& o1, Oracle& o2, const MatchConfig& cfg) {
  require_same_width(o1, o2);
  const std::size_t n = o1.width();
  Rng rng(cfg.seed);
  const Sequences s = sample_sequences(o1, o2, random_pattern_count(n, cfg), rng);

  std::unordered_map<std::uint64_t, std::size_t> c2_wire;
  for (std::size_t b = 0; b < n; ++b) {
    if (c2_wire.count(s.c2[b]) || c2_wire.count(~s.c2[b] & s.mask)) {
      throw AmbiguityError("two C2 output sequences are equal or complementary");
    }
    c2_wire.emplace(s.c2[b], b);
  }
  std::vector<std::size_t> images(n, kNone);
  std::uint64_t nu = 0;
  for (std::size_t b1 = 0; b1 < n; ++b1) {
    std::size_t b2 = kNone;
    if (auto it = c2_wire.find(s.c1[b1]); it != c2_wire.end()) {
      b2 = it->second;
    } else if (auto jt = c2_wire.find(~s.c1[b1] & s.mask); jt != c2_wire.end()) {
      b2 = jt->second;
      nu |= one_hot(b2);
    } else {
      throw PromiseViolation("C1 output sequence matches no C2 output bit or its complement");
    }
    if (images[b2] != kNone) throw AmbiguityError("two C1 output bits map to one C2 output bit");
    images[b2] = b1;
  }
  return {NegationMap(n, nu), PermutationMap(std::move(images))};
}

PermutationMap match_p_i_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  return solve_p_i_inverse(access(o1), access(o2));
}

PermutationMap match_p_i_onehot(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  return solve_p_i_onehot(access(o1), access(o2));
}

NegationMap match_n_i_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  const std::size_t n = o1.width();
  const BitVec zero(n);
  if (o2.has_inverse()) return NegationMap(n, o2.query_inverse(o1.query(zero)).value());  // C2^-1 C1 = C_nu
  if (o1.has_inverse()) return NegationMap(n, o1.query_inverse(o2.query(zero)).value());  // C1^-1 C2 = C_nu
  throw InverseUnavailable("N-I matching needs the inverse of C1 or C2");
}

NegationMap match_n_i_quantum(Oracle& o1, Oracle& o2, const MatchConfig& cfg) {
  require_same_width(o1, o2);
  const std::size_t n = o1.width();
  const std::size_t rounds = n_i_rounds(n, cfg);
  Rng rng(cfg.seed);
  std::uint64_t nu = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const SparseState in = SparseState::prepare(probe(n, i, WireInit::Zero));
    if (!states_agree(o1, in, o2, in, rounds, rng)) nu |= one_hot(i);
  }
  return NegationMap(n, nu);
}

NegPerm match_np_i_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  const Access c1 = access(o1);
  const Access c2 = access(o2);
  const std::size_t n = o1.width();
  if (c2.backward) {
    // C2^-1 C1 = C_pi C_nu
    return decode_negate_then_permute(n, [&](std::uint64_t x) { return c2.backward(c1.forward(x)); });
  }
  if (c1.backward) {
    // C1^-1 C2 = C_nu C_pi^-1
    return decode_inverse_permute_then_negate(n, [&](std::uint64_t x) { return c1.backward(c2.forward(x)); });
  }
  throw InverseUnavailable("NP-I matching needs the inverse of C1 or C2");
}

NegPerm match_np_i_quantum(Oracle& o1, Oracle& o2, const MatchConfig& cfg) {
  require_same_width(o1, o2);
  const std::size_t n = o1.width();
  const std::size_t rounds = np_i_rounds(n, cfg);
  Rng rng(cfg.seed);

  std::vector<SparseState> c2_probes;
  c2_probes.reserve(n);
  for (std::size_t b2 = 0; b2 < n; ++b2) c2_probes.push_back(SparseState::prepare(probe(n, b2, WireInit::Minus)));

  std::vector<std::size_t> images(n, kNone);
  std::vector<bool> taken(n, false);
  for (std::size_t b1 = 0; b1 < n; ++b1) {
    const SparseState in1 = SparseState::prepare(probe(n, b1, WireInit::Minus));
    for (std::size_t b2 = 0; b2 < n && images[b1] == kNone; ++b2) {
      if (taken[b2]) continue;
      if (states_agree(o1, in1, o2, c2_probes[b2], rounds, rng)) {
        images[b1] = b2;
        taken[b2] = true;
      }
    }
    if (images[b1] == kNone) throw NoPartnerError("no partner wire for C1 wire " + std::to_string(b1));
  }
  PermutationMap pi(std::move(images));

  std::uint64_t nu = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const SparseState in1 = SparseState::prepare(probe(n, i, WireInit::Zero));
    const SparseState in2 = SparseState::prepare(probe(n, pi(i), WireInit::Zero));
    if (!states_agree(o1, in1, o2, in2, rounds, rng)) nu |= one_hot(i);
  }
  return {NegationMap(n, nu), std::move(pi)};
}

InputPermOutputNeg match_p_n(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  return solve_p_n(access(o1), access(o2));
}

InputNegOutputPerm match_n_p_inv(Oracle& o1, Oracle& o2) {
  require_same_width(o1, o2);
  if (!o1.has_inverse() || !o2.has_inverse()) {
    throw InverseUnavailable("N-P matching needs the inverses of both C1 and C2");
  }
  // C1^-1 = C_nu C2^-1 C_pi^-1 is a P-N instance with input permutation pi^-1.
  InputPermOutputNeg r = solve_p_n(reversed(o1), reversed(o2));
  return {std::move(r.nu_y), r.pi_x.inverse()};
}

}  // namespace revmatch
