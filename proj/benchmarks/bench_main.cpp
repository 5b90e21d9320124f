#include <benchmark/benchmark.h>

#include <vector>

#include "revmatch/brute_force.hpp"
#include "revmatch/harness.hpp"
#include "revmatch/matchers.hpp"
#include "revmatch/qsim.hpp"
#include "revmatch/reductions.hpp"

using namespace revmatch;

static void BM_CircuitEval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(n, 10 * n, 1);
  std::uint64_t x = 0;
  for (auto _ : state) {
    x = c.apply((x + 1) & low_mask(n));
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_CircuitEval)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ApplyCircuitState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(n, 4 * n, 2);
  std::vector<WireInit> inits(n, WireInit::Plus);
  inits[0] = WireInit::Minus;
  const SparseState s = SparseState::prepare(inits);
  for (auto _ : state) benchmark::DoNotOptimize(apply_circuit(c, s));
  state.SetComplexityN(static_cast<std::int64_t>(s.support_size()));
}
BENCHMARK(BM_ApplyCircuitState)->DenseRange(6, 14, 2)->Complexity();

static void BM_Matcher(benchmark::State& state, const char* equiv, InverseFlags inv) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = gen_instance(EquivType::parse(equiv), n, 4 * n, 3, inv);
  MatchConfig cfg;
  cfg.budget = FailureBudget::UnionBound;
  for (auto _ : state) {
    const MatchOutcome out = run_match(inst, MatchMode::Auto, cfg);
    benchmark::DoNotOptimize(out.record.success);
  }
}
BENCHMARK_CAPTURE(BM_Matcher, i_p_rand, "I-P", InverseFlags{})->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Matcher, p_i_onehot, "P-I", InverseFlags{})->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Matcher, np_i_inv, "NP-I", InverseFlags{false, true})->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Matcher, n_i_quantum, "N-I", InverseFlags{})->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_Matcher, np_i_quantum, "NP-I", InverseFlags{})->Arg(6)->Arg(8);

static void BM_BruteForce(benchmark::State& state, const char* equiv) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = gen_instance(EquivType::parse(equiv), n, 4 * n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_match(inst.c1, inst.c2, inst.equiv));
}
BENCHMARK_CAPTURE(BM_BruteForce, n_n, "N-N")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_BruteForce, p_p, "P-P")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(BM_BruteForce, np_np, "NP-NP")->Arg(4)->Arg(5);

static void BM_VerifyEncoding(benchmark::State& state) {
  const Cnf phi(4, {{{0, false}, {1, true}}, {{1, false}, {2, false}, {3, true}}, {{0, true}, {3, false}},
                    {{2, true}}});
  const ReductionInstance inst = build_nn_instance(phi);
  for (auto _ : state) benchmark::DoNotOptimize(verify_encoding(phi, inst.c1, inst.layout));
}
BENCHMARK(BM_VerifyEncoding);

static void BM_CollisionSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(collision_bench(n, 10, ++seed).median);
}
BENCHMARK(BM_CollisionSearch)->Arg(10)->Arg(14);
BENCHMARK_MAIN();
