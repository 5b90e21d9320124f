#include <gtest/gtest.h>

#include <memory>

#include "revmatch/brute_force.hpp"
#include "revmatch/harness.hpp"
#include "revmatch/matchers.hpp"
#include "revmatch/random.hpp"
#include "support.hpp"

using namespace revmatch;
using testing_support::fig2_circuit;
using testing_support::reference_witness_holds;

namespace {

struct Pair {
  std::unique_ptr<Oracle> o1;
  std::unique_ptr<Oracle> o2;
};

Pair oracles(const Circuit& c1, const Circuit& c2, bool inv1, bool inv2) {
  return {std::make_unique<Oracle>(c1, inv1 ? std::optional<Circuit>(invert(c1)) : std::nullopt),
          std::make_unique<Oracle>(c2, inv2 ? std::optional<Circuit>(invert(c2)) : std::nullopt)};
}

MatchWitness witness(const char* e) { return MatchWitness{EquivType::parse(e), {}, {}, {}, {}}; }

MatchConfig config(std::uint64_t seed, double eps = 0.05) {
  MatchConfig cfg;
  cfg.seed = seed;
  cfg.epsilon = eps;
  return cfg;
}

}  // namespace

TEST(Counts, RepetitionFormulas) {
  EXPECT_EQ(ceil_log2(1), 0U);
  EXPECT_EQ(ceil_log2(4), 2U);
  EXPECT_EQ(ceil_log2(5), 3U);
  EXPECT_EQ(binary_code_patterns(4), 2U);
  EXPECT_EQ(binary_code_patterns(5), 3U);
  EXPECT_EQ(random_pattern_count(4, config(1, 0.01)), 11U);  // log2(1200) = 10.23
  EXPECT_EQ(n_i_rounds(8, config(1, 0.001)), 10U);
  MatchConfig ub = config(1, 0.05);
  ub.budget = FailureBudget::UnionBound;
  EXPECT_EQ(n_i_rounds(8, ub), 8U);    // log2(160) = 7.32
  EXPECT_EQ(np_i_rounds(8, ub), 11U);  // log2(1280) = 10.32
  ub.rounds = 3;
  EXPECT_EQ(np_i_rounds(8, ub), 3U);
  EXPECT_THROW(n_i_rounds(4, config(1, 0.0)), std::invalid_argument);
  EXPECT_THROW(n_i_rounds(4, config(1, 1.0)), std::invalid_argument);
}

TEST(MatchIN, Fig2Example) {
  const Circuit c2 = fig2_circuit();
  Circuit c1 = c2;
  c1.add_gate(2);
  auto p = oracles(c1, c2, false, false);
  const NegationMap nu = match_i_n(*p.o1, *p.o2);
  EXPECT_EQ(nu.flags(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(p.o1->counts().classical, 1U);
  EXPECT_EQ(p.o2->counts().classical, 1U);
  auto same = oracles(c2, c2, false, false);
  EXPECT_TRUE(match_i_n(*same.o1, *same.o2).is_identity());
}

TEST(MatchIPInv, CycleWithIdentityC2) {
  const PermutationMap cycle({1, 2, 3, 0});
  MatchWitness w = witness("I-P");
  w.pi_y = cycle;
  const Circuit c2(4);
  const Circuit c1 = realize(c2, w);
  for (auto [i1, i2] : {std::pair{false, true}, std::pair{true, false}}) {
    auto p = oracles(c1, c2, i1, i2);
    EXPECT_EQ(match_i_p_inv(*p.o1, *p.o2), cycle);
    EXPECT_EQ(p.o1->counts().total(), 2U);
    EXPECT_EQ(p.o2->counts().total(), 2U);
  }
  auto none = oracles(c1, c2, false, false);
  EXPECT_THROW(match_i_p_inv(*none.o1, *none.o2), InverseUnavailable);
}

TEST(MatchIPRand, IdentityAndRandom) {
  const Circuit c2 = random_circuit(6, 30, 1);
  auto same = oracles(c2, c2, false, false);
  EXPECT_TRUE(match_i_p_rand(*same.o1, *same.o2, config(4, 0.001)).is_identity());
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = gen_instance(EquivType::parse("I-P"), 6, 24, rng.next());
    auto p = oracles(inst.c1, inst.c2, false, false);
    MatchWitness w = witness("I-P");
    try {
      w.pi_y = match_i_p_rand(*p.o1, *p.o2, config(rng.next(), 0.001));
    } catch (const AmbiguityError&) {
      continue;
    }
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
  }
}

TEST(MatchINPInv, SpecExample) {
  MatchWitness w = witness("I-NP");
  w.nu_y = NegationMap::from_flags({1, 0, 0});
  w.pi_y = PermutationMap::transposition(3, 1, 2);
  const Circuit c2(3);
  const Circuit c1 = realize(c2, w);
  for (auto [i1, i2] : {std::pair{false, true}, std::pair{true, false}}) {
    auto p = oracles(c1, c2, i1, i2);
    const NegPerm r = match_i_np_inv(*p.o1, *p.o2);
    EXPECT_EQ(r.nu, *w.nu_y);
    EXPECT_EQ(r.pi, *w.pi_y);
    EXPECT_LE(p.o1->counts().total(), 1 + binary_code_patterns(3));
  }
}

TEST(MatchINPRand, AllOnesNegation) {
  const Circuit c2 = random_circuit(5, 20, 3);
  MatchWitness w = witness("I-NP");
  w.nu_y = NegationMap(5, 0b11111);
  w.pi_y = PermutationMap::identity(5);
  const Circuit c1 = realize(c2, w);
  auto p = oracles(c1, c2, false, false);
  const NegPerm r = match_i_np_rand(*p.o1, *p.o2, config(8, 0.001));
  EXPECT_EQ(r.nu, *w.nu_y);
  EXPECT_TRUE(r.pi.is_identity());
}

TEST(MatchPIOneHot, Fig2Cycle) {
  MatchWitness w = witness("P-I");
  w.pi_x = PermutationMap({1, 2, 0});
  const Circuit c2 = fig2_circuit();
  const Circuit c1 = realize(c2, w);
  auto p = oracles(c1, c2, false, false);
  const PermutationMap pi = match_p_i_onehot(*p.o1, *p.o2);
  EXPECT_EQ(pi, *w.pi_x);
  EXPECT_EQ(p.o1->counts().classical, 3U);
  EXPECT_EQ(p.o2->counts().classical, 3U);
}

TEST(MatchPIOneHot, MissingKeyOnBrokenPromise) {
  const Circuit c2 = fig2_circuit();
  Circuit c1 = c2;
  c1.add_gate(0);
  auto p = oracles(c1, c2, false, false);
  EXPECT_THROW(match_p_i_onehot(*p.o1, *p.o2), MatchError);
}

TEST(MatchPIInv, CycleBothRoutes) {
  MatchWitness w = witness("P-I");
  w.pi_x = PermutationMap({1, 2, 3, 0});
  const Circuit c2 = random_circuit(4, 15, 6);
  const Circuit c1 = realize(c2, w);
  for (auto [i1, i2] : {std::pair{false, true}, std::pair{true, false}}) {
    auto p = oracles(c1, c2, i1, i2);
    EXPECT_EQ(match_p_i_inv(*p.o1, *p.o2), *w.pi_x);
    EXPECT_EQ(p.o1->counts().total(), 2U);
  }
}

TEST(MatchNIInv, SpecExample) {
  MatchWitness w = witness("N-I");
  w.nu_x = NegationMap::from_flags({1, 1, 0});
  const Circuit c2 = random_circuit(3, 10, 5);
  const Circuit c1 = realize(c2, w);
  for (auto [i1, i2] : {std::pair{false, true}, std::pair{true, false}}) {
    auto p = oracles(c1, c2, i1, i2);
    EXPECT_EQ(match_n_i_inv(*p.o1, *p.o2), *w.nu_x);
    EXPECT_LE(p.o1->counts().total() + p.o2->counts().total(), 2U);
  }
}

TEST(MatchNIQuantum, ZeroNegationExhaustsAllRounds) {
  const Circuit c2 = random_circuit(5, 20, 5);
  auto p = oracles(c2, c2, false, false);
  const MatchConfig cfg = config(3, 0.05);
  EXPECT_TRUE(match_n_i_quantum(*p.o1, *p.o2, cfg).is_identity());
  const std::size_t k = n_i_rounds(5, cfg);
  EXPECT_EQ(p.o1->counts().quantum + p.o2->counts().quantum, 2 * 5 * k);
}

TEST(MatchNIQuantum, RecoversPlantedNegation) {
  Rng rng(30);
  MatchConfig cfg = config(0, 0.001);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = gen_instance(EquivType::parse("N-I"), 6, 24, rng.next());
    auto p = oracles(inst.c1, inst.c2, false, false);
    cfg.seed = rng.next();
    MatchWitness w = witness("N-I");
    w.nu_x = match_n_i_quantum(*p.o1, *p.o2, cfg);
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
    EXPECT_LE(p.o1->counts().quantum + p.o2->counts().quantum, 2 * 6 * n_i_rounds(6, cfg));
  }
}

TEST(MatchNPIInv, RandomInstancesBothRoutes) {
  Rng rng(40);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = gen_instance(EquivType::parse("NP-I"), 6, 24, rng.next());
    for (auto [i1, i2] : {std::pair{false, true}, std::pair{true, false}}) {
      auto p = oracles(inst.c1, inst.c2, i1, i2);
      const NegPerm r = match_np_i_inv(*p.o1, *p.o2);
      MatchWitness w = witness("NP-I");
      w.nu_x = r.nu;
      w.pi_x = r.pi;
      EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
      EXPECT_LE(p.o1->counts().total(), 1 + binary_code_patterns(6));
    }
  }
}

TEST(MatchNPIQuantum, IdentityAndRandom) {
  const Circuit c2 = random_circuit(4, 16, 2);
  auto same = oracles(c2, c2, false, false);
  const NegPerm id = match_np_i_quantum(*same.o1, *same.o2, config(1, 0.01));
  EXPECT_TRUE(id.nu.is_identity());
  EXPECT_TRUE(id.pi.is_identity());

  Rng rng(50);
  MatchConfig cfg = config(0, 0.01);
  cfg.budget = FailureBudget::UnionBound;
  for (int t = 0; t < 10; ++t) {
    const Instance inst = gen_instance(EquivType::parse("NP-I"), 6, 24, rng.next());
    auto p = oracles(inst.c1, inst.c2, false, false);
    cfg.seed = rng.next();
    const NegPerm r = match_np_i_quantum(*p.o1, *p.o2, cfg);
    MatchWitness w = witness("NP-I");
    w.nu_x = r.nu;
    w.pi_x = r.pi;
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
    const std::size_t k = np_i_rounds(6, cfg);
    EXPECT_LE(p.o1->counts().quantum + p.o2->counts().quantum, 2 * k * (36 + 6));
  }
}

// A flipped pair orientation yields pi^-1 in place of pi, which only verifies
// when pi is an involution; count the instances where the direction matters.
TEST(MatchNPIQuantum, OrientationAgreesWithBruteForce) {
  Rng rng(60);
  int directed = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng.below(3);
    const Instance inst = gen_instance(EquivType::parse("NP-I"), n, 6 * n, rng.next());
    auto p = oracles(inst.c1, inst.c2, false, false);
    MatchConfig cfg = config(rng.next(), 0.001);
    cfg.budget = FailureBudget::UnionBound;
    const NegPerm r = match_np_i_quantum(*p.o1, *p.o2, cfg);
    MatchWitness w = witness("NP-I");
    w.nu_x = r.nu;
    w.pi_x = r.pi;
    const auto brute = brute_force_match(inst.c1, inst.c2, inst.equiv);
    ASSERT_TRUE(brute.has_value());
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, *brute));
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
    if (inst.planted.pi_x->inverse() != *inst.planted.pi_x) ++directed;
  }
  EXPECT_GT(directed, 20);
}

TEST(MatchPN, RandomInstancesAllRoutes) {
  Rng rng(70);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = gen_instance(EquivType::parse("P-N"), 6, 24, rng.next());
    for (auto [i1, i2] : {std::pair{false, false}, std::pair{false, true}, std::pair{true, false}}) {
      auto p = oracles(inst.c1, inst.c2, i1, i2);
      const InputPermOutputNeg r = match_p_n(*p.o1, *p.o2);
      MatchWitness w = witness("P-N");
      w.pi_x = r.pi_x;
      w.nu_y = r.nu_y;
      EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
      if (!i1 && !i2) EXPECT_EQ(p.o1->counts().classical, 1 + 6U);
    }
  }
}

TEST(MatchNPInv, RandomInstances) {
  Rng rng(80);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = gen_instance(EquivType::parse("N-P"), 6, 24, rng.next());
    auto p = oracles(inst.c1, inst.c2, true, true);
    const InputNegOutputPerm r = match_n_p_inv(*p.o1, *p.o2);
    MatchWitness w = witness("N-P");
    w.nu_x = r.nu_x;
    w.pi_y = r.pi_y;
    EXPECT_TRUE(reference_witness_holds(inst.c1, inst.c2, w));
  }
  const Instance inst = gen_instance(EquivType::parse("N-P"), 4, 10, 1);
  auto one = oracles(inst.c1, inst.c2, true, false);
  EXPECT_THROW(match_n_p_inv(*one.o1, *one.o2), InverseUnavailable);
}

TEST(Matchers, WidthMismatch) {
  auto p = oracles(Circuit(3), Circuit(4), false, false);
  EXPECT_THROW(match_i_n(*p.o1, *p.o2), std::invalid_argument);
}
