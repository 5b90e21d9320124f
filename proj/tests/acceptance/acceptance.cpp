// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revmatch/brute_force.hpp"
#include "revmatch/cnf.hpp"
#include "revmatch/harness.hpp"
#include "revmatch/matchers.hpp"
#include "revmatch/qsim.hpp"
#include "revmatch/random.hpp"
#include "revmatch/reductions.hpp"

using namespace revmatch;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, const Verdict& v, const std::string& summary, double secs) {
  if (!v.pass) ++failures;
  std::printf("%s criterion %d (%s): %s [%.1fs]%s%s\n", v.pass ? "PASS" : "FAIL", id, name.c_str(), summary.c_str(),
              secs, v.pass ? "" : " -- ", v.pass ? "" : v.detail.c_str());
  std::fflush(stdout);
}

EquivType eq(const char* s) { return EquivType::parse(s); }

struct Oracles {
  std::unique_ptr<Oracle> o1;
  std::unique_ptr<Oracle> o2;
};

Oracles make_oracles(const Instance& inst, InverseFlags inv) {
  return {std::make_unique<Oracle>(inst.c1, inv.c1 ? std::optional<Circuit>(invert(inst.c1)) : std::nullopt),
          std::make_unique<Oracle>(inst.c2, inv.c2 ? std::optional<Circuit>(invert(inst.c2)) : std::nullopt)};
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion_round_trip() {
  const auto start = Clock::now();
  struct Variant {
    const char* equiv;
    InverseFlags inv;
    bool randomized;
  };
  const std::vector<Variant> variants = {
      {"I-N", {}, false},
      {"I-P", {false, true}, false},   {"I-P", {true, false}, false},   {"I-P", {}, true},
      {"I-NP", {false, true}, false},  {"I-NP", {true, false}, false},  {"I-NP", {}, true},
      {"P-I", {false, true}, false},   {"P-I", {true, false}, false},   {"P-I", {}, false},
      {"P-N", {false, true}, false},   {"P-N", {true, false}, false},   {"P-N", {}, false},
      {"N-P", {true, true}, false},
      {"N-I", {false, true}, false},   {"N-I", {true, false}, false},   {"N-I", {}, true},
      {"NP-I", {false, true}, false},  {"NP-I", {true, false}, false},  {"NP-I", {}, true},
  };
  constexpr std::size_t kTrials = 100;
  Verdict v;
  std::size_t cells = 0;
  std::size_t worst = kTrials;
  std::string worst_cell;
  for (const Variant& var : variants) {
    for (std::size_t n : {4, 6, 8}) {
      std::size_t ok = 0;
      std::string algorithm;
      for (std::size_t t = 0; t < kTrials; ++t) {
        const std::uint64_t seed = 1000003 * n + 7919 * t + 17 * cells;
        const Instance inst = gen_instance(eq(var.equiv), n, 5 * n, seed, var.inv);
        MatchConfig cfg;
        cfg.epsilon = 0.05;
        cfg.budget = FailureBudget::UnionBound;
        cfg.seed = seed ^ 0x5bd1e995;
        // Single attempt: the success rate of the matcher itself, no retries.
        const MatchOutcome out = run_match(inst, MatchMode::Auto, cfg, t, 1);
        algorithm = std::string(to_string(out.record.algorithm));
        v.require(is_randomized(out.record.algorithm) == var.randomized,
                  std::string(var.equiv) + " selected unexpected algorithm " + algorithm);
        // run_match verifies exhaustively for these widths.
        if (out.record.success) ++ok;
      }
      const std::string cell = std::string(var.equiv) + "/" + algorithm + "/n=" + std::to_string(n);
      if (var.randomized) {
        v.require(ok >= 90, cell + " succeeded " + std::to_string(ok) + "/100");
      } else {
        v.require(ok == kTrials, cell + " succeeded " + std::to_string(ok) + "/100");
      }
      if (ok < worst) {
        worst = ok;
        worst_cell = cell;
      }
      ++cells;
    }
  }
  const double secs = seconds_since(start);
  v.require(secs < 120.0, fmt("runtime %.1fs over 120s", secs));
  report(1, "round-trip recovery", v,
         std::to_string(cells) + " cells x 100 instances, lowest " + std::to_string(worst) + "/100 (" + worst_cell + ")",
         secs);
}

// ---------------------------------------------------------------------------

void criterion_query_counts() {
  const auto start = Clock::now();
  Verdict v;
  std::size_t runs = 0;
  const double eps = 0.05;
  const std::size_t k = static_cast<std::size_t>(std::ceil(std::log2(1.0 / eps)));
  for (std::size_t n : {3, 4, 5, 6, 7, 8}) {
    const std::size_t patterns = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    for (std::uint64_t t = 0; t < 20; ++t) {
      const std::uint64_t seed = 31 * n + t;
      const std::string tag = " (n=" + std::to_string(n) + ")";
      {
        const Instance inst = gen_instance(eq("I-N"), n, 4 * n, seed);
        auto o = make_oracles(inst, {});
        match_i_n(*o.o1, *o.o2);
        v.require(o.o1->counts() == QueryCounts{1, 0, 0} && o.o2->counts() == QueryCounts{1, 0, 0},
                  "match_i_n counts" + tag);
      }
      {
        const Instance inst = gen_instance(eq("P-I"), n, 4 * n, seed);
        auto o = make_oracles(inst, {});
        match_p_i_onehot(*o.o1, *o.o2);
        v.require(o.o1->counts() == QueryCounts{n, 0, 0} && o.o2->counts() == QueryCounts{n, 0, 0},
                  "match_p_i_onehot counts" + tag);
      }
      {
        const Instance inst = gen_instance(eq("I-P"), n, 4 * n, seed);
        auto a = make_oracles(inst, {false, true});
        match_i_p_inv(*a.o1, *a.o2);
        v.require(a.o1->counts() == QueryCounts{patterns, 0, 0} && a.o2->counts() == QueryCounts{0, patterns, 0},
                  "match_i_p_inv via C2^-1 counts" + tag);
        auto b = make_oracles(inst, {true, false});
        match_i_p_inv(*b.o1, *b.o2);
        v.require(b.o1->counts() == QueryCounts{0, patterns, 0} && b.o2->counts() == QueryCounts{patterns, 0, 0},
                  "match_i_p_inv via C1^-1 counts" + tag);
      }
      {
        const Instance inst = gen_instance(eq("N-I"), n, 4 * n, seed);
        for (InverseFlags inv : {InverseFlags{false, true}, InverseFlags{true, false}}) {
          auto o = make_oracles(inst, inv);
          match_n_i_inv(*o.o1, *o.o2);
          v.require(o.o1->counts().total() + o.o2->counts().total() <= 2, "match_n_i_inv total" + tag);
        }
        auto q = make_oracles(inst, {});
        MatchConfig cfg;
        cfg.epsilon = eps;
        cfg.seed = seed;
        match_n_i_quantum(*q.o1, *q.o2, cfg);
        const auto c1 = q.o1->counts(), c2 = q.o2->counts();
        v.require(c1.classical + c1.inverse + c2.classical + c2.inverse == 0 && c1.quantum + c2.quantum <= 2 * n * k,
                  "match_n_i_quantum quantum queries " + std::to_string(c1.quantum + c2.quantum) + " > 2nk" + tag);
      }
      {
        const Instance inst = gen_instance(eq("NP-I"), n, 4 * n, seed);
        auto q = make_oracles(inst, {});
        MatchConfig cfg;
        cfg.epsilon = eps;
        cfg.seed = seed;
        try {
          match_np_i_quantum(*q.o1, *q.o2, cfg);
        } catch (const NoPartnerError&) {
          // A run that gives up early still has to respect the bound.
        }
        const auto c1 = q.o1->counts(), c2 = q.o2->counts();
        v.require(c1.classical + c1.inverse + c2.classical + c2.inverse == 0 &&
                      c1.quantum + c2.quantum <= 2 * k * (n * n + n),
                  "match_np_i_quantum quantum queries " + std::to_string(c1.quantum + c2.quantum) +
                      " > 2k(n^2+n)" + tag);
      }
      ++runs;
    }
  }
  report(2, "exact query counts", v,
         std::to_string(runs) + " instance rounds over n=3..8, k=" + std::to_string(k) + " at eps=0.05",
         seconds_since(start));
}

// ---------------------------------------------------------------------------

void criterion_swap_test() {
  const auto start = Clock::now();
  constexpr int kTrials = 10000;
  Verdict v;
  Rng rng(2024);
  auto frequency = [&](const SparseState& a, const SparseState& b) {
    int ones = 0;
    for (int i = 0; i < kTrials; ++i) ones += swap_test(a, b, rng);
    return static_cast<double>(ones) / kTrials;
  };
  const std::vector<WireInit> mixed{WireInit::Plus, WireInit::Minus, WireInit::Zero, WireInit::Plus};
  const SparseState s = SparseState::prepare(mixed);
  const double same = frequency(s, s);
  const std::vector<WireInit> zero_plus{WireInit::Zero, WireInit::Plus, WireInit::Plus};
  const std::vector<WireInit> one_plus{WireInit::One, WireInit::Plus, WireInit::Plus};
  const double orth = frequency(SparseState::prepare(zero_plus), SparseState::prepare(one_plus));
  const std::vector<WireInit> plus{WireInit::Plus};
  const std::vector<WireInit> zero{WireInit::Zero};
  const double half = frequency(SparseState::prepare(plus), SparseState::prepare(zero));
  v.require(same == 0.0, fmt("identical states gave frequency %.4f", same));
  v.require(orth >= 0.485 && orth <= 0.515, fmt("orthogonal frequency %.4f outside [0.485, 0.515]", orth));
  v.require(half >= 0.237 && half <= 0.263, fmt("1/sqrt2 frequency %.4f outside [0.237, 0.263]", half));
  char buf[160];
  std::snprintf(buf, sizeof buf, "identical %.4f, orthogonal %.4f, overlap 1/sqrt2 %.4f over %d trials each", same,
                orth, half, kTrials);
  report(3, "swap-test statistics", v, buf, seconds_since(start));
}

// ---------------------------------------------------------------------------

void criterion_inner_product() {
  const auto start = Clock::now();
  Verdict v;
  Rng rng(77);
  constexpr int kCases = 1000;
  int nonzero = 0;
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 1 + rng.below(12);
    std::vector<WireInit> a(n), b(n);
    for (auto& w : a) w = static_cast<WireInit>(rng.below(4));
    // Share most wires so many overlaps are non-zero.
    for (std::size_t i = 0; i < n; ++i) b[i] = rng.below(4) == 0 ? static_cast<WireInit>(rng.below(4)) : a[i];
    const SparseState s1 = SparseState::prepare(a), s2 = SparseState::prepare(b);
    const Circuit u = random_circuit(n, 2 + rng.below(4 * n), rng.next());
    const SparseState u1 = apply_circuit(u, s1), u2 = apply_circuit(u, s2);
    const Overlap before = overlap(s1, s2), after = overlap(u1, u2);
    if (before.signed_sum != 0) ++nonzero;
    v.require(before == after && inner_product(s1, s2) == inner_product(u1, u2),
              "inner product changed on case " + std::to_string(c));
  }
  report(4, "inner-product preservation", v,
         std::to_string(kCases) + " random (circuit, state pair) cases, n<=12, " + std::to_string(nonzero) +
             " with non-zero overlap, all exact",
         seconds_since(start));
}

// ---------------------------------------------------------------------------

Cnf random_formula(std::size_t max_n, std::size_t max_m, Rng& rng) {
  return random_cnf(1 + rng.below(max_n), 1 + rng.below(max_m), 3, rng);
}

Cnf unique_formula(std::size_t max_n, std::size_t max_m, Rng& rng) {
  for (;;) {
    const Cnf phi = random_formula(max_n, max_m, rng);
    if (brute_force_sat(phi).models == 1) return phi;
  }
}

void criterion_reductions() {
  const auto start = Clock::now();
  Verdict v;
  Rng rng(5150);
  for (int t = 0; t < 50; ++t) {
    const Cnf phi = random_formula(4, 4, rng);
    const ReductionInstance inst = build_nn_instance(phi);
    v.require(verify_encoding(phi, inst.c1, inst.layout), "N-N encoding failed on formula " + std::to_string(t));
    v.require(inst.c1.gate_count() == 8 * phi.clause_count() + 4, "N-N gate count differs from 8m+4");
  }
  for (int t = 0; t < 50; ++t) {
    const Cnf phi = random_formula(2, 2, rng);
    const ReductionInstance inst = build_pp_instance(phi);
    v.require(verify_encoding(phi, inst.c1, inst.layout), "P-P encoding failed on formula " + std::to_string(t));
    v.require(inst.c1.gate_count() == 8 * (phi.clause_count() + 2 * phi.var_count()) + 4,
              "P-P gate count differs from 8(m+2n)+4");
  }
  std::size_t nn_ok = 0, pp_ok = 0;
  for (int t = 0; t < 20; ++t) {
    const Cnf phi = unique_formula(4, 4, rng);
    const ReductionInstance inst = build_nn_instance(phi);
    const auto w = brute_force_match(inst.c1, inst.c2, eq("N-N"));
    const auto truth = brute_force_sat(phi).first;
    if (w && extract_assignment_nn(phi, *w) == truth) ++nn_ok;
  }
  for (int t = 0; t < 20; ++t) {
    const Cnf phi = unique_formula(2, 2, rng);
    const ReductionInstance inst = build_pp_instance(phi);
    const auto w = brute_force_match(inst.c1, inst.c2, eq("P-P"));
    const auto truth = brute_force_sat(phi).first;
    if (w && extract_assignment_pp(phi, *w) == truth) ++pp_ok;
  }
  v.require(nn_ok == 20, "N-N extraction matched the SAT oracle on " + std::to_string(nn_ok) + "/20");
  v.require(pp_ok == 20, "P-P extraction matched the SAT oracle on " + std::to_string(pp_ok) + "/20");
  const double secs = seconds_since(start);
  v.require(secs < 60.0, fmt("runtime %.1fs over 60s", secs));
  report(5, "reduction correctness", v,
         "50+50 encodings verified exhaustively; extraction N-N " + std::to_string(nn_ok) + "/20, P-P " +
             std::to_string(pp_ok) + "/20",
         secs);
}

// ---------------------------------------------------------------------------

void criterion_collision_wall() {
  const auto start = Clock::now();
  Verdict v;
  std::map<std::size_t, double> median;
  for (std::size_t n : {8, 10, 12, 14, 16}) median[n] = collision_bench(n, 500, 900 + n).median;
  std::string summary = "medians";
  for (const auto& [n, m] : median) summary += " n=" + std::to_string(n) + ":" + fmt("%.1f", m);
  summary += "; ratios";
  for (std::size_t n : {8, 10, 12, 14}) {
    const double ratio = median[n + 2] / median[n];
    summary += fmt(" %.2f", ratio);
    v.require(ratio >= 1.5 && ratio <= 3.0,
              "median(" + std::to_string(n + 2) + ")/median(" + std::to_string(n) + ") = " + fmt("%.2f", ratio));
  }
  v.require(median[14] >= 50.0, fmt("median at n=14 is %.1f < 50", median[14]));
  report(6, "classical collision wall", v, summary, seconds_since(start));
}

// ---------------------------------------------------------------------------

void criterion_brute_agreement() {
  const auto start = Clock::now();
  Verdict v;
  std::size_t checked = 0;
  const InverseFlags regimes[] = {{}, {true, false}, {false, true}};
  for (EquivType e : all_equivalences()) {
    if (!is_tractable(e)) continue;
    for (std::size_t t = 0; t < 50; ++t) {
      const InverseFlags inv = e == eq("N-P") ? InverseFlags{true, true} : regimes[t % 3];
      const Instance inst = gen_instance(e, 4, 16, 4242 + 97 * t + 13 * checked, inv);
      MatchConfig cfg;
      cfg.budget = FailureBudget::UnionBound;
      cfg.seed = t + 1;
      const MatchOutcome fast = run_match(inst, MatchMode::Auto, cfg, t);
      const auto brute = brute_force_match(inst.c1, inst.c2, e);
      v.require(fast.witness && verify_witness(inst.c1, inst.c2, *fast.witness),
                e.to_string() + " fast matcher witness missing or invalid: " + fast.error);
      v.require(brute && verify_witness(inst.c1, inst.c2, *brute), e.to_string() + " brute-force witness invalid");
      ++checked;
    }
  }
  report(7, "brute-force agreement", v,
         std::to_string(checked) + " planted n=4 instances over the 9 tractable equivalences (incl. I-I)",
         seconds_since(start));
}

// ---------------------------------------------------------------------------

void criterion_dispatcher() {
  const auto start = Clock::now();
  Verdict v;
  // Expected cells: "*" rows need one inverse, "**" rows need both.
  auto expected = [](const std::string& e, InverseFlags inv) -> std::optional<Algorithm> {
    const bool any = inv.c1 || inv.c2, both = inv.c1 && inv.c2;
    if (e == "I-I") return Algorithm::Trivial;
    if (e == "I-N") return Algorithm::INOutputZero;
    if (e == "I-P") return any ? Algorithm::IPInverse : Algorithm::IPRandom;
    if (e == "I-NP") return any ? Algorithm::INPInverse : Algorithm::INPRandom;
    if (e == "P-I") return any ? Algorithm::PIInverse : Algorithm::PIOneHot;
    if (e == "N-I") return any ? Algorithm::NIInverse : Algorithm::NIQuantum;
    if (e == "NP-I") return any ? Algorithm::NPIInverse : Algorithm::NPIQuantum;
    if (e == "P-N") return Algorithm::PN;
    if (e == "N-P" && both) return Algorithm::NPInverse;
    return std::nullopt;
  };
  const InverseFlags regimes[] = {{}, {true, false}, {false, true}, {true, true}};
  std::size_t cells = 0, refused = 0;
  for (EquivType e : all_equivalences()) {
    for (InverseFlags inv : regimes) {
      ++cells;
      const auto want = expected(e.to_string(), inv);
      std::optional<Algorithm> got;
      try {
        got = select_algorithm(e, inv, MatchMode::Auto);
      } catch (const NoAlgorithmError&) {
        ++refused;
      }
      v.require(got == want, "cell " + e.to_string() + " inverses(" + std::to_string(inv.c1) +
                                 std::to_string(inv.c2) + ") dispatched wrongly");
      v.require(select_algorithm(e, inv, MatchMode::Brute) == Algorithm::BruteForce,
                "brute mode not honoured for " + e.to_string());
      if (!got) continue;
      // The selected algorithm must use inverse queries exactly when the cell is an inverse-assisted one.
      const Instance inst = gen_instance(e, 4, 16, 99 + cells, inv);
      MatchConfig cfg;
      cfg.budget = FailureBudget::UnionBound;
      const MatchOutcome out = run_match(inst, MatchMode::Auto, cfg);
      const bool used_inverse = out.record.o1.inverse + out.record.o2.inverse > 0;
      const bool inverse_cell = e.to_string() != "I-I" && e.to_string() != "I-N" && (inv.c1 || inv.c2);
      v.require(out.record.success, "dispatched algorithm failed on " + e.to_string());
      v.require(used_inverse == inverse_cell, "inverse usage mismatch on " + e.to_string());
    }
  }
  std::size_t hard = 0;
  for (EquivType e : all_equivalences()) hard += is_tractable(e) ? 0 : 1;
  v.require(hard == 7, "hard set has " + std::to_string(hard) + " members");
  report(8, "dispatcher fidelity", v,
         std::to_string(cells) + " (equiv x inverse) cells, " + std::to_string(refused) +
             " refused with NoAlgorithm (7 hard equivalences x 4 + N-P without both inverses x 3)",
         seconds_since(start));
}

}  // namespace

int main() {
  criterion_round_trip();
  criterion_query_counts();
  criterion_swap_test();
  criterion_inner_product();
  criterion_reductions();
  criterion_collision_wall();
  criterion_brute_agreement();
  criterion_dispatcher();
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
