#include "revmatch/equivalence.hpp"

#include "revmatch/random.hpp"

namespace revmatch {

namespace {

constexpr std::size_t kExhaustiveVerifyLimit = 24;

std::optional<Transform> parse_side(std::string_view s) {
  if (s == "I") return Transform::I;
  if (s == "N") return Transform::N;
  if (s == "P") return Transform::P;
  if (s == "NP") return Transform::NP;
  return std::nullopt;
}

const char* side_name(Transform t) {
  switch (t) {
    case Transform::I: return "I";
    case Transform::N: return "N";
    case Transform::P: return "P";
    case Transform::NP: return "NP";
  }
  return "?";
}

void check_component(bool wanted, bool present, const char* name, const EquivType& e) {
  if (wanted && !present) throw WitnessShapeError(e.to_string() + " witness is missing " + name);
  if (!wanted && present) throw WitnessShapeError(e.to_string() + " witness must not carry " + name);
}

}  // namespace

EquivType EquivType::parse(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("equivalence must look like X-Y");
  auto in = parse_side(text.substr(0, dash));
  auto out = parse_side(text.substr(dash + 1));
  if (!in || !out) throw std::invalid_argument("unknown equivalence '" + std::string(text) + "'");
  return {*in, *out};
}

std::string EquivType::to_string() const { return std::string(side_name(input)) + "-" + side_name(output); }

std::array<EquivType, 16> all_equivalences() {
  constexpr std::array<Transform, 4> sides{Transform::I, Transform::N, Transform::P, Transform::NP};
  std::array<EquivType, 16> out{};
  std::size_t k = 0;
  for (Transform in : sides) {
    for (Transform o : sides) out[k++] = {in, o};
  }
  return out;
}

bool is_tractable(EquivType e) {
  // Hard iff the pair dominates N-N or P-P.
  const bool dominates_nn = negates(e.input) && negates(e.output);
  const bool dominates_pp = permutes(e.input) && permutes(e.output);
  return !dominates_nn && !dominates_pp;
}

void MatchWitness::validate(std::size_t width) const {
  check_component(negates(equiv.input), nu_x.has_value(), "nu_x", equiv);
  check_component(permutes(equiv.input), pi_x.has_value(), "pi_x", equiv);
  check_component(negates(equiv.output), nu_y.has_value(), "nu_y", equiv);
  check_component(permutes(equiv.output), pi_y.has_value(), "pi_y", equiv);
  auto width_ok = [&](std::size_t w) {
    if (w != width) throw WitnessShapeError("witness width " + std::to_string(w) + " != circuit width " + std::to_string(width));
  };
  if (nu_x) width_ok(nu_x->width());
  if (pi_x) width_ok(pi_x->width());
  if (nu_y) width_ok(nu_y->width());
  if (pi_y) width_ok(pi_y->width());
}

Circuit input_transform(const MatchWitness& w, std::size_t width) {
  Circuit c(width);
  if (w.nu_x) c.append(neg_circuit(*w.nu_x));
  if (w.pi_x) c.append(perm_circuit(*w.pi_x));
  return c;
}

Circuit output_transform(const MatchWitness& w, std::size_t width) {
  Circuit c(width);
  if (w.nu_y) c.append(neg_circuit(*w.nu_y));
  if (w.pi_y) c.append(perm_circuit(*w.pi_y));
  return c;
}

Circuit realize(const Circuit& c2, const MatchWitness& w) {
  w.validate(c2.width());
  Circuit c = input_transform(w, c2.width());
  c.append(c2);
  c.append(output_transform(w, c2.width()));
  return c;
}

bool verify_witness(const Circuit& c1, const Circuit& c2, const MatchWitness& w, VerifyMode mode) {
  if (c1.width() != c2.width()) throw std::invalid_argument("verify_witness: circuit width mismatch");
  const Circuit rhs = realize(c2, w);
  const std::size_t n = c1.width();
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    if (n > kExhaustiveVerifyLimit) throw std::invalid_argument("exhaustive verification limited to 24 wires");
    const std::uint64_t rows = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < rows; ++x) {
      if (c1.apply(x) != rhs.apply(x)) return false;
    }
    return true;
  }
  Rng rng(mode.seed);
  for (std::size_t i = 0; i < mode.samples; ++i) {
    const std::uint64_t x = rng.bits(n);
    if (c1.apply(x) != rhs.apply(x)) return false;
  }
  return true;
}

}  // namespace revmatch
