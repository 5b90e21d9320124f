#include "revmatch/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "revmatch/random.hpp"

namespace revmatch {

MctGate::MctGate(std::size_t target, std::vector<ControlLine> controls)
    : target_(target), controls_(std::move(controls)) {
  if (target_ >= kMaxWidth) throw std::invalid_argument("MCT target wire out of range");
  for (const ControlLine& c : controls_) {
    if (c.wire >= kMaxWidth) throw std::invalid_argument("MCT control wire out of range");
    if (c.wire == target_) {
      throw std::invalid_argument("MCT control on target wire " + std::to_string(c.wire));
    }
    const std::uint64_t bit = std::uint64_t{1} << c.wire;
    if (care_ & bit) throw std::invalid_argument("duplicate MCT control wire " + std::to_string(c.wire));
    care_ |= bit;
    if (c.polarity == Polarity::Positive) fire_ |= bit;
  }
}

std::size_t MctGate::max_wire() const {
  std::size_t hi = target_;
  for (const ControlLine& c : controls_) hi = std::max(hi, c.wire);
  return hi;
}

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width == 0 || width > kMaxWidth) {
    throw std::invalid_argument("circuit width must be in [1, 64], got " + std::to_string(width));
  }
}

std::size_t Circuit::gate_count() const {
  return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(), [](const CircuitElement& e) {
    return std::holds_alternative<MctGate>(e);
  }));
}

Circuit& Circuit::add(CircuitElement element) {
  if (const auto* g = std::get_if<MctGate>(&element)) {
    if (g->max_wire() >= width_) throw std::invalid_argument("gate wire exceeds circuit width");
  } else if (std::get<Rewire>(element).map.width() != width_) {
    throw std::invalid_argument("rewire width differs from circuit width");
  }
  elements_.push_back(std::move(element));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ != width_) throw std::invalid_argument("circuit width mismatch");
  elements_.insert(elements_.end(), other.elements_.begin(), other.elements_.end());
  return *this;
}

std::uint64_t Circuit::apply(std::uint64_t x) const {
  for (const CircuitElement& e : elements_) {
    if (const auto* g = std::get_if<MctGate>(&e)) {
      x = g->apply(x);
    } else {
      x = std::get<Rewire>(e).map.apply(x);
    }
  }
  return x;
}

BitVec Circuit::eval(const BitVec& x) const {
  if (x.width() != width_) {
    throw std::invalid_argument("input width " + std::to_string(x.width()) + " != circuit width " +
                                std::to_string(width_));
  }
  return BitVec(width_, apply(x.value()));
}

Circuit invert(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.elements().rbegin(); it != c.elements().rend(); ++it) {
    if (const auto* r = std::get_if<Rewire>(&*it)) {
      out.add(Rewire{r->map.inverse()});
    } else {
      out.add(*it);
    }
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) throw std::invalid_argument("compose: circuit width mismatch");
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit neg_circuit(const NegationMap& nu) {
  Circuit out(nu.width());
  for (std::size_t i = 0; i < nu.width(); ++i) {
    if (nu(i)) out.add(MctGate::not_gate(i));
  }
  return out;
}

Circuit perm_circuit(const PermutationMap& pi) {
  Circuit out(pi.width());
  out.add(Rewire{pi});
  return out;
}

NegationMap commute_neg_perm(const NegationMap& nu, const PermutationMap& pi) {
  if (nu.width() != pi.width()) throw std::invalid_argument("commute_neg_perm: width mismatch");
  return NegationMap(nu.width(), pi.apply(nu.mask()));
}

std::vector<std::uint64_t> truth_table(const Circuit& c, std::size_t limit) {
  if (c.width() > limit) {
    throw std::invalid_argument("truth table width " + std::to_string(c.width()) + " exceeds limit " +
                                std::to_string(limit));
  }
  const std::uint64_t rows = std::uint64_t{1} << c.width();
  std::vector<std::uint64_t> table(rows);
  for (std::uint64_t x = 0; x < rows; ++x) table[x] = c.apply(x);
  return table;
}

bool is_bijection(std::span<const std::uint64_t> table) {
  std::vector<bool> seen(table.size(), false);
  for (std::uint64_t y : table) {
    if (y >= table.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool functionally_equal(const Circuit& a, const Circuit& b, std::size_t limit) {
  if (a.width() != b.width()) return false;
  if (a.width() > limit) throw std::invalid_argument("functionally_equal: width exceeds limit");
  const std::uint64_t rows = std::uint64_t{1} << a.width();
  for (std::uint64_t x = 0; x < rows; ++x) {
    if (a.apply(x) != b.apply(x)) return false;
  }
  return true;
}

Circuit random_circuit(std::size_t width, std::size_t gate_count, std::uint64_t seed,
                       RandomCircuitOptions options) {
  Circuit out(width);
  Rng rng(seed);
  const std::size_t max_k = std::min(width - 1, options.max_controls);
  std::vector<std::size_t> pool;
  for (std::size_t g = 0; g < gate_count; ++g) {
    const std::size_t target = rng.below(width);
    const std::size_t k = rng.below(max_k + 1);
    pool.clear();
    for (std::size_t w = 0; w < width; ++w) {
      if (w != target) pool.push_back(w);
    }
    std::vector<ControlLine> controls;
    for (std::size_t j = 0; j < k; ++j) {
      // Partial Fisher-Yates draw of k distinct wires.
      const std::size_t pick = j + rng.below(pool.size() - j);
      std::swap(pool[j], pool[pick]);
      controls.push_back({pool[j], rng.coin() ? Polarity::Negative : Polarity::Positive});
    }
    std::sort(controls.begin(), controls.end(),
              [](const ControlLine& a, const ControlLine& b) { return a.wire < b.wire; });
    out.add(MctGate(target, std::move(controls)));
  }
  return out;
}

}  // namespace revmatch
