#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "revmatch/maps.hpp"
#include "revmatch/oracle.hpp"

namespace revmatch {

// Matching algorithms for the tractable equivalences. Every matcher sees the
// circuits only through Oracle queries and assumes the promised equivalence
// holds; callers that need certainty run verify_witness on the result.
//
// Witness convention (see equivalence.hpp): C1 = C_Y . C2 . C_X, and a
// permutation map sends the value on wire i to wire pi(i).

class MatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Randomized matcher drew sequences that do not identify the permutation
/// uniquely. Retrying with a fresh seed is the intended response.
class AmbiguityError : public MatchError {
 public:
  using MatchError::MatchError;
};

/// One-hot P-I matching met an output pattern of C2 that C1 never produced.
class MissingKeyError : public MatchError {
 public:
  using MatchError::MatchError;
};

/// Quantum NP-I matching found no partner wire for some probe.
class NoPartnerError : public MatchError {
 public:
  using MatchError::MatchError;
};

/// Observed responses contradict the promised equivalence.
class PromiseViolation : public MatchError {
 public:
  using MatchError::MatchError;
};

/// How epsilon is split across the individual decisions of a quantum matcher.
enum class FailureBudget {
  PerDecision,  // each bit / wire-pair decision fails with probability <= epsilon
  UnionBound,   // whole run fails with probability <= epsilon (epsilon/n, or epsilon/n^2 for NP-I)
};

struct MatchConfig {
  double epsilon = 0.05;
  std::uint64_t seed = 1;
  /// Overrides the derived repetition count (random patterns or swap-test rounds).
  std::optional<std::size_t> rounds;
  FailureBudget budget = FailureBudget::PerDecision;

  /// Throws std::invalid_argument unless 0 < epsilon < 1.
  void validate() const;
};

/// Smallest k with 2^k >= x (0 for x <= 1).
std::size_t ceil_log2(double x);

/// Number of binary-code patterns used by the inverse-assisted permutation decoders.
std::size_t binary_code_patterns(std::size_t n);
/// k = ceil(log2(n(n-1)/epsilon)) random patterns, at least 1.
std::size_t random_pattern_count(std::size_t n, const MatchConfig& cfg);
/// Swap-test repetitions per bit for N-I: ceil(log2(1/epsilon_bit)).
std::size_t n_i_rounds(std::size_t n, const MatchConfig& cfg);
/// Swap-test repetitions per decision for NP-I.
std::size_t np_i_rounds(std::size_t n, const MatchConfig& cfg);

/// Negation plus permutation on one side; nu is applied before pi.
struct NegPerm {
  NegationMap nu;
  PermutationMap pi;
};

/// P-N witness: input permutation and output negation.
struct InputPermOutputNeg {
  PermutationMap pi_x;
  NegationMap nu_y;
};

/// N-P witness: input negation and output permutation.
struct InputNegOutputPerm {
  NegationMap nu_x;
  PermutationMap pi_y;
};

// --- I-N: C1 = C_nu C2 -------------------------------------------------------

/// One all-zero query per oracle; nu = C1(0) xor C2(0).
NegationMap match_i_n(Oracle& o1, Oracle& o2);

// --- I-P: C1 = C_pi C2 -------------------------------------------------------

/// Decodes C1 C2^-1 (or C2 C1^-1) with ceil(log2 n) binary-code patterns.
/// Throws InverseUnavailable when neither oracle has an inverse.
PermutationMap match_i_p_inv(Oracle& o1, Oracle& o2);
/// Random shared inputs; output bit sequences identify the permutation.
/// Throws AmbiguityError when two output bits share a sequence.
PermutationMap match_i_p_rand(Oracle& o1, Oracle& o2, const MatchConfig& cfg);

// --- I-NP: C1 = C_pi C_nu C2 -------------------------------------------------

/// At most 1 + ceil(log2 n) composed evaluations.
NegPerm match_i_np_inv(Oracle& o1, Oracle& o2);
/// Like match_i_p_rand, but a complemented sequence marks a negated bit.
NegPerm match_i_np_rand(Oracle& o1, Oracle& o2, const MatchConfig& cfg);

// --- P-I: C1 = C2 C_pi -------------------------------------------------------

PermutationMap match_p_i_inv(Oracle& o1, Oracle& o2);
/// n one-hot queries per oracle. Throws MissingKeyError on a promise violation.
PermutationMap match_p_i_onehot(Oracle& o1, Oracle& o2);

// --- N-I: C1 = C2 C_nu -------------------------------------------------------

/// Two queries total: the all-zero input through C2^-1 C1 (or C1^-1 C2).
NegationMap match_n_i_inv(Oracle& o1, Oracle& o2);
/// Swap-test algorithm. For each wire i the probe state is |0> on i and |+>
/// elsewhere; a NOT on a |+> wire is invisible, so C1 and C2 outputs differ
/// (are orthogonal) exactly when nu(i) = 1. Uses at most 2 n k quantum queries.
NegationMap match_n_i_quantum(Oracle& o1, Oracle& o2, const MatchConfig& cfg);

// --- NP-I: C1 = C2 C_pi C_nu -------------------------------------------------

NegPerm match_np_i_inv(Oracle& o1, Oracle& o2);
/// Phase 1 probes wire pairs with |-> on wire b1 of C1 and b2 of C2 (|+>
/// elsewhere); the outputs coincide iff pi(b1) = b2 since negations only flip
/// the global sign. Phase 2 runs the N-I probe against C2 with the probe wire
/// relocated through pi. At most 2k(n^2 + n) quantum queries.
NegPerm match_np_i_quantum(Oracle& o1, Oracle& o2, const MatchConfig& cfg);

// --- P-N: C1 = C_nu C2 C_pi --------------------------------------------------

/// nu_y from one all-zero query each, then P-I against C_nu C2 (inverse route
/// when an inverse exists, one-hot otherwise).
InputPermOutputNeg match_p_n(Oracle& o1, Oracle& o2);

// --- N-P: C1 = C_pi C2 C_nu --------------------------------------------------

/// Runs P-N on the inverse oracles, since C1^-1 = C_nu C2^-1 C_pi^-1.
/// Throws InverseUnavailable unless both oracles have inverses.
InputNegOutputPerm match_n_p_inv(Oracle& o1, Oracle& o2);

}  // namespace revmatch
