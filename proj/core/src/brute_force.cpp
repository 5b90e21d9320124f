#include "revmatch/brute_force.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace revmatch {

namespace {

constexpr std::size_t kMaxBruteWidth = 20;

using Row = std::array<std::uint32_t, kMaxBruteWidth>;

// For every C2 output wire i, the C1 output wires j that have so far agreed
// with it (eq) or disagreed on every row (neg).
struct Compat {
  Row eq{};
  Row neg{};
};

class Search {
 public:
  Search(const Circuit& c1, const Circuit& c2, EquivType equiv, BruteForceStats* stats)
      : n_(c1.width()), equiv_(equiv), t1_(truth_table(c1, kMaxBruteWidth)), t2_(truth_table(c2, kMaxBruteWidth)),
        stats_(stats) {}

  std::optional<MatchWitness> run() {
    const std::uint64_t neg_count = negates(equiv_.input) ? (std::uint64_t{1} << n_) : 1;
    for (std::uint64_t nu_x = 0; nu_x < neg_count; ++nu_x) {
      nu_x_ = nu_x;
      image_.assign(n_, 0);
      used_ = 0;
      Compat start;
      const std::uint32_t all = static_cast<std::uint32_t>(low_mask(n_));
      for (std::size_t i = 0; i < n_; ++i) {
        start.eq[i] = all;
        start.neg[i] = all;
      }
      if (auto w = descend(0, start)) return w;
    }
    return std::nullopt;
  }

 private:
  // Allowed (i -> j) edges for the output side given the agreement masks.
  std::uint32_t edges(const Compat& c, std::size_t i) const {
    std::uint32_t e = c.eq[i];
    if (negates(equiv_.output)) e |= c.neg[i];
    if (!permutes(equiv_.output)) e &= std::uint32_t{1} << i;
    return e;
  }

  // Kuhn's augmenting paths; fills match_of_j (C1 wire j -> C2 wire i).
  bool perfect_matching(const Compat& c, std::vector<int>& match_of_j) const {
    match_of_j.assign(n_, -1);
    std::array<std::uint32_t, kMaxBruteWidth> adj{};
    for (std::size_t i = 0; i < n_; ++i) {
      adj[i] = edges(c, i);
      if (adj[i] == 0) return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t visited = 0;
      if (!augment(static_cast<int>(i), adj, visited, match_of_j)) return false;
    }
    return true;
  }

  bool augment(int i, const std::array<std::uint32_t, kMaxBruteWidth>& adj, std::uint32_t& visited,
               std::vector<int>& match_of_j) const {
    for (std::size_t j = 0; j < n_; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (!(adj[i] & bit) || (visited & bit)) continue;
      visited |= bit;
      if (match_of_j[j] < 0 || augment(match_of_j[j], adj, visited, match_of_j)) {
        match_of_j[j] = i;
        return true;
      }
    }
    return false;
  }

  // Compare rows whose permuted input is fixed once wires 0..depth-1 are
  // placed: y with bit depth-1 set and no higher bits, x = y xor nu_x.
  bool check_new_rows(std::size_t depth, Compat& c) const {
    const std::uint64_t lo = depth == 0 ? 0 : (std::uint64_t{1} << (depth - 1));
    const std::uint64_t hi = std::uint64_t{1} << depth;
    for (std::uint64_t y = lo; y < hi; ++y) {
      std::uint64_t moved = 0;
      for (std::size_t w = 0; w < depth; ++w) moved |= ((y >> w) & 1U) << image_[w];
      const std::uint64_t out1 = t1_[y ^ nu_x_];
      const std::uint64_t out2 = t2_[moved];
      if (stats_) ++stats_->rows_checked;
      const auto out1_lo = static_cast<std::uint32_t>(out1);
      for (std::size_t i = 0; i < n_; ++i) {
        if ((out2 >> i) & 1U) {
          c.eq[i] &= out1_lo;
          c.neg[i] &= ~out1_lo;
        } else {
          c.eq[i] &= ~out1_lo;
          c.neg[i] &= out1_lo;
        }
      }
    }
    std::vector<int> scratch;
    return perfect_matching(c, scratch);
  }

  std::optional<MatchWitness> descend(std::size_t depth, Compat c) {
    if (stats_) ++stats_->nodes;
    if (!check_new_rows(depth, c)) return std::nullopt;
    if (depth == n_) return build(c);

    const std::size_t w = depth;
    for (std::size_t target = 0; target < n_; ++target) {
      if (!permutes(equiv_.input) && target != w) continue;
      if (used_ & (std::uint64_t{1} << target)) continue;
      image_[w] = target;
      used_ |= std::uint64_t{1} << target;
      auto found = descend(depth + 1, c);
      used_ &= ~(std::uint64_t{1} << target);
      if (found) return found;
    }
    return std::nullopt;
  }

  MatchWitness build(const Compat& c) const {
    std::vector<int> match_of_j;
    perfect_matching(c, match_of_j);
    std::vector<std::size_t> pi_y(n_);
    std::uint64_t nu_y = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const auto i = static_cast<std::size_t>(match_of_j[j]);
      pi_y[i] = j;
      if (!(c.eq[i] & (std::uint32_t{1} << j))) nu_y |= std::uint64_t{1} << i;
    }
    MatchWitness w{equiv_, {}, {}, {}, {}};
    if (negates(equiv_.input)) w.nu_x = NegationMap(n_, nu_x_);
    if (permutes(equiv_.input)) w.pi_x = PermutationMap(std::vector<std::size_t>(image_.begin(), image_.end()));
    if (negates(equiv_.output)) w.nu_y = NegationMap(n_, nu_y);
    if (permutes(equiv_.output)) w.pi_y = PermutationMap(std::move(pi_y));
    return w;
  }

  std::size_t n_;
  EquivType equiv_;
  std::vector<std::uint64_t> t1_;
  std::vector<std::uint64_t> t2_;
  BruteForceStats* stats_;

  std::uint64_t nu_x_ = 0;
  std::vector<std::size_t> image_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::optional<MatchWitness> brute_force_match(const Circuit& c1, const Circuit& c2, EquivType equiv,
                                              BruteForceOptions options, BruteForceStats* stats) {
  if (c1.width() != c2.width()) throw std::invalid_argument("brute_force_match: circuit width mismatch");
  const std::size_t limit = std::min(options.max_width, kMaxBruteWidth);
  if (c1.width() > limit) {
    throw std::invalid_argument("brute_force_match: width " + std::to_string(c1.width()) + " exceeds limit " +
                                std::to_string(limit));
  }
  return Search(c1, c2, equiv, stats).run();
}

}  // namespace revmatch
