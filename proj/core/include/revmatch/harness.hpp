#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revmatch/circuit.hpp"
#include "revmatch/equivalence.hpp"
#include "revmatch/matchers.hpp"
#include "revmatch/oracle.hpp"

namespace revmatch {

struct InverseFlags {
  bool c1 = false;
  bool c2 = false;

  bool any() const { return c1 || c2; }
  bool both() const { return c1 && c2; }
};

struct Instance {
  EquivType equiv;
  Circuit c1;
  Circuit c2;
  std::optional<Circuit> c1_inverse;
  std::optional<Circuit> c2_inverse;
  MatchWitness planted;
  std::uint64_t seed = 0;

  std::size_t width() const { return c2.width(); }
  InverseFlags inverses() const { return {c1_inverse.has_value(), c2_inverse.has_value()}; }
};

/// Witness with every component demanded by `equiv` drawn uniformly.
MatchWitness random_witness(EquivType equiv, std::size_t n, Rng& rng);

/// C2 = random_circuit(n, gates), C1 = realize(C2, planted). Throws
/// std::invalid_argument when n < 1.
Instance gen_instance(EquivType equiv, std::size_t n, std::size_t gates, std::uint64_t seed,
                      InverseFlags inverses = {});

enum class Algorithm {
  Trivial,
  INOutputZero,
  IPInverse,
  IPRandom,
  INPInverse,
  INPRandom,
  PIInverse,
  PIOneHot,
  NIInverse,
  NIQuantum,
  NPIInverse,
  NPIQuantum,
  PN,
  NPInverse,
  BruteForce,
};

std::string_view to_string(Algorithm a);
/// True for algorithms whose success is probabilistic.
bool is_randomized(Algorithm a);
bool is_quantum(Algorithm a);

enum class MatchMode { Auto, Classical, Quantum, Brute };

std::string_view to_string(MatchMode m);
/// Throws std::invalid_argument on an unknown name.
MatchMode parse_match_mode(std::string_view text);

class NoAlgorithmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algorithm for an (equivalence, inverse availability, mode) cell.
///
/// Auto prefers an inverse-assisted algorithm, then an inverse-free classical
/// one, then a quantum one. Classical never picks a quantum algorithm. Quantum
/// picks the swap-test matcher where one exists and behaves like Auto
/// elsewhere. Brute always picks BruteForce. Throws NoAlgorithmError for
/// unsupported cells.
Algorithm select_algorithm(EquivType equiv, InverseFlags inverses, MatchMode mode);

struct BenchRecord {
  std::size_t trial = 0;
  EquivType equiv;
  std::size_t n = 0;
  MatchMode mode = MatchMode::Auto;
  Algorithm algorithm = Algorithm::Trivial;
  QueryCounts o1;
  QueryCounts o2;
  bool success = false;
  double wall_ms = 0.0;
};

struct MatchOutcome {
  std::optional<MatchWitness> witness;  // set when the run produced a verified witness
  BenchRecord record;
  std::size_t attempts = 0;
  std::string error;  // last failure message, empty on success
};

inline constexpr std::size_t kMatchAttempts = 3;

/// Runs the selected algorithm on oracles built from the instance and verifies
/// the witness (exhaustively up to 16 wires, sampled above). Ambiguity and
/// NoPartner failures are retried with fresh seeds, up to max_attempts runs;
/// query counts accumulate over all attempts. Throws NoAlgorithmError.
MatchOutcome run_match(const Instance& instance, MatchMode mode, const MatchConfig& cfg, std::size_t trial = 0,
                       std::size_t max_attempts = kMatchAttempts);

struct BenchConfig {
  EquivType equiv;
  std::size_t n = 4;
  std::size_t gates = 0;  // 0 selects 4n
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  MatchMode mode = MatchMode::Auto;
  InverseFlags inverses;
  double epsilon = 0.05;
  FailureBudget budget = FailureBudget::PerDecision;
};

/// Trial t uses an instance and matcher seed derived from (seed, t) only.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

struct CollisionStats {
  std::size_t n = 0;
  std::vector<std::uint64_t> queries;  // C2 queries per trial
  double median = 0.0;
  double mean = 0.0;
};

/// Inverse-free classical search for the N-I negation: each step queries C1
/// and C2 on fresh distinct random inputs and stops once any C2 output equals
/// any C1 output. Counts C2 queries per trial.
CollisionStats collision_bench(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Writes c1.real, c2.real, the available inverses and manifest.json into dir.
/// Returns the manifest path.
std::string write_instance(const Instance& instance, const std::string& dir);
/// Reads a manifest written by write_instance; circuit paths are relative to the manifest.
Instance read_instance(const std::string& manifest_path);

}  // namespace revmatch
