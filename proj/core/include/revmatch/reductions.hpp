#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "revmatch/circuit.hpp"
#include "revmatch/cnf.hpp"
#include "revmatch/equivalence.hpp"

namespace revmatch {

/// Wire roles of a reduction instance, top to bottom:
///
///     N-N:  x_1..x_n, a_1..a_m, b, z                 width n + m + 2
///     P-P:  x_1..x_n, y_1..y_n, a_1..a_{m+2n}, b, z   width 4n + m + 2
///
/// Variable v of the encoded formula (x_1..x_n, then y_1..y_n) sits on wire v.
struct ReductionLayout {
  enum class Kind { NN, PP };

  Kind kind = Kind::NN;
  std::size_t var_count = 0;     // variables of the original formula
  std::vector<std::size_t> x_wires;
  std::vector<std::size_t> y_wires;  // empty for N-N
  std::vector<std::size_t> a_wires;  // one per encoded clause
  std::size_t b_wire = 0;
  std::size_t z_wire = 0;
  std::size_t width = 0;

  /// Throws std::invalid_argument when n or m is zero.
  static ReductionLayout nn(std::size_t n, std::size_t m);
  static ReductionLayout pp(std::size_t n, std::size_t m);

  std::size_t encoded_var_count() const { return x_wires.size() + y_wires.size(); }
  std::size_t var_wire(std::size_t v) const;
};

/// MCT on a_i with a negative control for each positive literal and a positive
/// control for each negated one, followed by NOT on a_i: a_i -> a_i ^ c_i(x).
/// Throws std::invalid_argument when a literal or the clause index falls outside the layout.
std::pair<MctGate, MctGate> clause_encoder(const Clause& clause, std::size_t clause_index,
                                           const ReductionLayout& layout);

/// U(phi) = clause encoders in clause order; an involution.
Circuit build_u_phi(const Cnf& encoded, const ReductionLayout& layout);

struct ReductionInstance {
  Circuit c1;
  Circuit c2;
  ReductionLayout layout;
  Cnf encoded;  // phi for N-N, dual_rail(phi) for P-P
};

/// C1 = wide(b), U, wide(z), U, wide(b), U, wide(z), U maps z -> z ^ (phi(x) & !a).
/// C2 is one MCT: z -> z ^ (x_1 ... x_n & !a). Throws std::invalid_argument on
/// a formula without clauses or variables.
ReductionInstance build_nn_instance(const Cnf& phi);
/// Same construction over dual_rail(phi). C2 has positive controls on the
/// first n wires and negative controls on the next 3n + m.
ReductionInstance build_pp_instance(const Cnf& phi);

/// Exhaustively checks that C1 leaves every wire but z alone and flips z by
/// f = phi'(x) & !a (phi' = phi, or dual_rail(phi) for a P-P layout).
/// Throws std::invalid_argument for widths over 16.
bool verify_encoding(const Cnf& phi, const Circuit& c1, const ReductionLayout& layout);

/// x_i = 1 - nu_x(x_i). Returns nullopt (unsatisfied) when the candidate fails phi.
/// Throws WitnessShapeError unless w is an N-N witness of the instance width.
std::optional<Assignment> extract_assignment_nn(const Cnf& phi, const MatchWitness& w);
/// x_i = 1 iff pi_x sends x_i into C2's positive-control region (wires 0..n-1).
std::optional<Assignment> extract_assignment_pp(const Cnf& phi, const MatchWitness& w);

}  // namespace revmatch
