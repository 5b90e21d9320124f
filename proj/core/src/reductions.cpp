#include "revmatch/reductions.hpp"

#include <stdexcept>
#include <string>

namespace revmatch {

namespace {

constexpr std::size_t kMaxVerifyWidth = 16;

ReductionLayout make_layout(ReductionLayout::Kind kind, std::size_t n, std::size_t clauses, bool dual) {
  if (n == 0) throw std::invalid_argument("reduction: formula has no variables");
  if (clauses == 0) throw std::invalid_argument("reduction: formula has no clauses");
  ReductionLayout l;
  l.kind = kind;
  l.var_count = n;
  std::size_t wire = 0;
  for (std::size_t i = 0; i < n; ++i) l.x_wires.push_back(wire++);
  if (dual) {
    for (std::size_t i = 0; i < n; ++i) l.y_wires.push_back(wire++);
  }
  for (std::size_t i = 0; i < clauses; ++i) l.a_wires.push_back(wire++);
  l.b_wire = wire++;
  l.z_wire = wire++;
  l.width = wire;
  if (l.width > kMaxWidth) throw std::invalid_argument("reduction: instance wider than 64 wires");
  return l;
}

std::vector<ControlLine> a_controls(const ReductionLayout& l, Polarity p) {
  std::vector<ControlLine> out;
  for (std::size_t w : l.a_wires) out.push_back({w, p});
  return out;
}

Circuit build_c1(const Cnf& encoded, const ReductionLayout& l) {
  const Circuit u = build_u_phi(encoded, l);
  const MctGate to_b(l.b_wire, a_controls(l, Polarity::Negative));
  std::vector<ControlLine> zc = a_controls(l, Polarity::Positive);
  zc.push_back({l.b_wire, Polarity::Positive});
  const MctGate to_z(l.z_wire, zc);

  Circuit c1(l.width);
  for (int half = 0; half < 2; ++half) {
    c1.add(to_b).append(u);
    c1.add(to_z).append(u);
  }
  return c1;
}

std::uint64_t a_mask(const ReductionLayout& l) {
  std::uint64_t m = 0;
  for (std::size_t w : l.a_wires) m |= std::uint64_t{1} << w;
  return m;
}

std::uint64_t encoded_vars(const ReductionLayout& l, std::uint64_t x) {
  return x & low_mask(l.encoded_var_count());
}

}  // namespace

ReductionLayout ReductionLayout::nn(std::size_t n, std::size_t m) { return make_layout(Kind::NN, n, m, false); }

ReductionLayout ReductionLayout::pp(std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("reduction: formula has no clauses");
  return make_layout(Kind::PP, n, m + 2 * n, true);
}

std::size_t ReductionLayout::var_wire(std::size_t v) const {
  if (v < x_wires.size()) return x_wires[v];
  if (v < x_wires.size() + y_wires.size()) return y_wires[v - x_wires.size()];
  throw std::invalid_argument("variable " + std::to_string(v + 1) + " outside the layout");
}

std::pair<MctGate, MctGate> clause_encoder(const Clause& clause, std::size_t clause_index,
                                           const ReductionLayout& layout) {
  if (clause_index >= layout.a_wires.size()) throw std::invalid_argument("clause index outside the layout");
  std::vector<ControlLine> controls;
  for (const Literal& lit : clause) {
    controls.push_back({layout.var_wire(lit.var), lit.negated ? Polarity::Positive : Polarity::Negative});
  }
  const std::size_t a = layout.a_wires[clause_index];
  return {MctGate(a, std::move(controls)), MctGate::not_gate(a)};
}

Circuit build_u_phi(const Cnf& encoded, const ReductionLayout& layout) {
  if (encoded.clause_count() != layout.a_wires.size()) {
    throw std::invalid_argument("clause count differs from the layout");
  }
  Circuit u(layout.width);
  for (std::size_t i = 0; i < encoded.clause_count(); ++i) {
    auto [mct, inv] = clause_encoder(encoded.clauses()[i], i, layout);
    u.add(std::move(mct)).add(std::move(inv));
  }
  return u;
}

ReductionInstance build_nn_instance(const Cnf& phi) {
  ReductionLayout l = ReductionLayout::nn(phi.var_count(), phi.clause_count());
  Circuit c1 = build_c1(phi, l);
  std::vector<ControlLine> controls;
  for (std::size_t w : l.x_wires) controls.push_back({w, Polarity::Positive});
  for (std::size_t w : l.a_wires) controls.push_back({w, Polarity::Negative});
  Circuit c2(l.width);
  c2.add_gate(l.z_wire, std::move(controls));
  return {std::move(c1), std::move(c2), std::move(l), phi};
}

ReductionInstance build_pp_instance(const Cnf& phi) {
  ReductionLayout l = ReductionLayout::pp(phi.var_count(), phi.clause_count());
  Cnf encoded = dual_rail(phi);
  Circuit c1 = build_c1(encoded, l);
  const std::size_t n = phi.var_count();
  std::vector<ControlLine> controls;
  for (std::size_t w = 0; w < n; ++w) controls.push_back({w, Polarity::Positive});
  for (std::size_t w = n; w < l.b_wire; ++w) controls.push_back({w, Polarity::Negative});
  Circuit c2(l.width);
  c2.add_gate(l.z_wire, std::move(controls));
  return {std::move(c1), std::move(c2), std::move(l), std::move(encoded)};
}

bool verify_encoding(const Cnf& phi, const Circuit& c1, const ReductionLayout& layout) {
  if (layout.width > kMaxVerifyWidth) throw std::invalid_argument("verify_encoding: width over 16");
  if (c1.width() != layout.width) return false;
  const Cnf encoded = layout.y_wires.empty() ? phi : dual_rail(phi);
  if (encoded.clause_count() != layout.a_wires.size() || encoded.var_count() != layout.encoded_var_count()) {
    return false;
  }
  const std::uint64_t amask = a_mask(layout);
  const std::uint64_t zbit = std::uint64_t{1} << layout.z_wire;
  const std::uint64_t total = std::uint64_t{1} << layout.width;
  for (std::uint64_t x = 0; x < total; ++x) {
    const bool f = (x & amask) == 0 && encoded.evaluate_bits(encoded_vars(layout, x));
    if (c1.apply(x) != (f ? x ^ zbit : x)) return false;
  }
  return true;
}

std::optional<Assignment> extract_assignment_nn(const Cnf& phi, const MatchWitness& w) {
  const ReductionLayout l = ReductionLayout::nn(phi.var_count(), phi.clause_count());
  if (w.equiv != EquivType{Transform::N, Transform::N}) throw WitnessShapeError("expected an N-N witness");
  w.validate(l.width);
  Assignment a(phi.var_count());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = !(*w.nu_x)(l.x_wires[i]);
  if (!phi.evaluate(a)) return std::nullopt;
  return a;
}

std::optional<Assignment> extract_assignment_pp(const Cnf& phi, const MatchWitness& w) {
  const ReductionLayout l = ReductionLayout::pp(phi.var_count(), phi.clause_count());
  if (w.equiv != EquivType{Transform::P, Transform::P}) throw WitnessShapeError("expected a P-P witness");
  w.validate(l.width);
  const std::size_t n = phi.var_count();
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (*w.pi_x)(l.x_wires[i]) < n;
  if (!phi.evaluate(a)) return std::nullopt;
  return a;
}

}  // namespace revmatch
