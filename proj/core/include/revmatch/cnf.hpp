#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revmatch {

class Rng;

struct Literal {
  std::size_t var;      // zero-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;
using Assignment = std::vector<bool>;

/// CNF formula. Clauses are non-empty, mention each variable at most once and
/// only variables below var_count().
class Cnf {
 public:
  /// Throws std::invalid_argument when an invariant is violated.
  Cnf(std::size_t var_count, std::vector<Clause> clauses);

  std::size_t var_count() const { return var_count_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  bool evaluate(const Assignment& a) const;
  /// Assignment packed as bit v = variable v.
  bool evaluate_bits(std::uint64_t bits) const;

  bool operator==(const Cnf&) const = default;

 private:
  std::size_t var_count_;
  std::vector<Clause> clauses_;
};

/// DIMACS CNF: "p cnf <vars> <clauses>" header, "c" comment lines, clauses as
/// signed 1-based literals terminated by 0. Throws std::invalid_argument on a
/// malformed header, an empty clause, an out-of-range literal, a repeated
/// variable inside one clause, or a clause count that differs from the header.
Cnf parse_dimacs(std::string_view text);
std::string write_dimacs(const Cnf& cnf);
Cnf read_dimacs_file(const std::string& path);

/// Adds y_j (variable n + j) with clauses (x_j | y_j) & (!x_j | !y_j) for every
/// original variable, forcing y_j = !x_j.
Cnf dual_rail(const Cnf& phi);

/// Reference SAT oracle: plain enumeration of all 2^n assignments (n <= 24).
struct SatCount {
  std::uint64_t models = 0;
  std::optional<Assignment> first;  // lowest model in binary order
};
SatCount brute_force_sat(const Cnf& phi);

/// Random formula with clause lengths in [1, max_clause_len] over distinct variables.
Cnf random_cnf(std::size_t var_count, std::size_t clause_count, std::size_t max_clause_len, Rng& rng);

std::string to_string(const Assignment& a);

}  // namespace revmatch
