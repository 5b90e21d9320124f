#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revmatch/circuit.hpp"
#include "revmatch/maps.hpp"

namespace revmatch {

/// Transformation allowed on one side of a circuit.
enum class Transform : std::uint8_t { I, N, P, NP };

constexpr bool negates(Transform t) { return t == Transform::N || t == Transform::NP; }
constexpr bool permutes(Transform t) { return t == Transform::P || t == Transform::NP; }

/// X-Y equivalence, with the convention
///
///     C1 = C_Y . C2 . C_X        (C_X acts on inputs before C2, C_Y on outputs after it)
///
/// On either side NP means "negate, then permute": C_X = C_pi_x C_nu_x and
/// C_Y = C_pi_y C_nu_y in matrix order.
struct EquivType {
  Transform input = Transform::I;
  Transform output = Transform::I;

  /// Accepts "X-Y" with X, Y in {I, N, P, NP}; throws std::invalid_argument.
  static EquivType parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const EquivType&) const = default;
};

/// All 16 combinations, input side major.
std::array<EquivType, 16> all_equivalences();

/// Equivalences with a polynomial (classical or quantum) matcher, plus I-I.
bool is_tractable(EquivType e);

class WitnessShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MatchWitness {
  EquivType equiv;
  std::optional<NegationMap> nu_x;
  std::optional<PermutationMap> pi_x;
  std::optional<NegationMap> nu_y;
  std::optional<PermutationMap> pi_y;

  /// Throws WitnessShapeError unless exactly the components demanded by
  /// `equiv` are present and all have the given width.
  void validate(std::size_t width) const;

  bool operator==(const MatchWitness&) const = default;
};

/// C_X as a circuit (identity when the input side is I).
Circuit input_transform(const MatchWitness& w, std::size_t width);
Circuit output_transform(const MatchWitness& w, std::size_t width);

/// C_Y . c2 . C_X.
Circuit realize(const Circuit& c2, const MatchWitness& w);

struct VerifyMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode sampled(std::size_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed}; }
};

/// Checks C1 == C_Y . C2 . C_X on every input (exhaustive, width <= 24) or on
/// `samples` random inputs. Throws WitnessShapeError on a malformed witness.
bool verify_witness(const Circuit& c1, const Circuit& c2, const MatchWitness& w,
                    VerifyMode mode = VerifyMode::exhaustive());

}  // namespace revmatch
