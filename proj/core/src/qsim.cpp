#include "revmatch/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "revmatch/random.hpp"

namespace revmatch {

SparseState SparseState::prepare(std::span<const WireInit> inits) {
  if (inits.empty()) throw std::invalid_argument("prepare: empty wire list");
  if (inits.size() > kMaxWidth) throw std::invalid_argument("prepare: too many wires");
  const std::size_t n = inits.size();

  std::uint64_t fixed = 0;
  std::vector<std::size_t> free_wires;
  std::uint64_t minus_mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    switch (inits[i]) {
      case WireInit::Zero: break;
      case WireInit::One: fixed |= std::uint64_t{1} << i; break;
      case WireInit::Minus: minus_mask |= std::uint64_t{1} << i; [[fallthrough]];
      case WireInit::Plus: free_wires.push_back(i); break;
    }
  }
  if (free_wires.size() > 22) {
    throw std::invalid_argument("prepare: support 2^" + std::to_string(free_wires.size()) + " exceeds limit");
  }

  // Depositing r into ascending free positions is monotone in r, so the terms
  // come out sorted.
  const std::uint64_t count = std::uint64_t{1} << free_wires.size();
  std::vector<Term> terms;
  terms.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint64_t x = fixed;
    for (std::size_t b = 0; b < free_wires.size(); ++b) {
      x |= ((r >> b) & 1U) << free_wires[b];
    }
    const bool odd = std::popcount(x & minus_mask) & 1;
    terms.push_back({x, static_cast<std::int8_t>(odd ? -1 : 1)});
  }
  return SparseState(n, std::move(terms));
}

int SparseState::sign_of(std::uint64_t basis) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), basis,
                             [](const Term& t, std::uint64_t b) { return t.basis < b; });
  return (it != terms_.end() && it->basis == basis) ? it->sign : 0;
}

SparseState apply_circuit(const Circuit& c, const SparseState& s) {
  if (c.width() != s.width()) throw std::invalid_argument("apply_circuit: width mismatch");
  std::vector<SparseState::Term> out;
  out.reserve(s.terms().size());
  for (const SparseState::Term& t : s.terms()) out.push_back({c.apply(t.basis), t.sign});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.basis < b.basis; });
  return SparseState(s.width(), std::move(out));
}

double Overlap::value() const {
  if (size1 == 0 || size2 == 0) return 0.0;
  return static_cast<double>(signed_sum) / std::sqrt(static_cast<double>(size1) * static_cast<double>(size2));
}

double Overlap::squared() const {
  if (size1 == 0 || size2 == 0) return 0.0;
  const double s = static_cast<double>(signed_sum);
  return s * s / (static_cast<double>(size1) * static_cast<double>(size2));
}

Overlap overlap(const SparseState& s1, const SparseState& s2) {
  if (s1.width() != s2.width()) throw std::invalid_argument("overlap: width mismatch");
  Overlap o{0, s1.support_size(), s2.support_size()};
  auto a = s1.terms().begin();
  auto b = s2.terms().begin();
  while (a != s1.terms().end() && b != s2.terms().end()) {
    if (a->basis < b->basis) {
      ++a;
    } else if (b->basis < a->basis) {
      ++b;
    } else {
      o.signed_sum += a->sign * b->sign;
      ++a;
      ++b;
    }
  }
  return o;
}

double inner_product(const SparseState& s1, const SparseState& s2) { return overlap(s1, s2).value(); }

bool equal_up_to_global_sign(const SparseState& s1, const SparseState& s2) {
  const Overlap o = overlap(s1, s2);
  const auto mag = static_cast<std::uint64_t>(o.signed_sum < 0 ? -o.signed_sum : o.signed_sum);
  return o.size1 == o.size2 && mag == o.size1;
}

double swap_test_one_probability(const SparseState& s1, const SparseState& s2) {
  return 0.5 - 0.5 * overlap(s1, s2).squared();
}

int swap_test(const SparseState& s1, const SparseState& s2, Rng& rng) {
  const double p_one = swap_test_one_probability(s1, s2);
  return rng.uniform01() < p_one ? 1 : 0;
}

}  // namespace revmatch
