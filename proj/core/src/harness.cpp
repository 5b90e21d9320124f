#include "revmatch/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <unordered_set>

#include "revmatch/brute_force.hpp"
#include "revmatch/random.hpp"
#include "revmatch/real_io.hpp"
#include "revmatch/witness_io.hpp"

namespace revmatch {

namespace {

constexpr std::size_t kExhaustiveVerifyWidth = 16;
constexpr std::size_t kVerifySamples = 4096;
constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

const EquivType kII{Transform::I, Transform::I};
const EquivType kIN{Transform::I, Transform::N};
const EquivType kIP{Transform::I, Transform::P};
const EquivType kINP{Transform::I, Transform::NP};
const EquivType kPI{Transform::P, Transform::I};
const EquivType kNI{Transform::N, Transform::I};
const EquivType kNPI{Transform::NP, Transform::I};
const EquivType kPN{Transform::P, Transform::N};
const EquivType kNP{Transform::N, Transform::P};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return Rng(seed).split(index).next(); }

MatchWitness run_algorithm(Algorithm a, const Instance& inst, Oracle& o1, Oracle& o2, const MatchConfig& cfg) {
  MatchWitness w{inst.equiv, {}, {}, {}, {}};
  switch (a) {
    case Algorithm::Trivial:
      break;
    case Algorithm::INOutputZero:
      w.nu_y = match_i_n(o1, o2);
      break;
    case Algorithm::IPInverse:
      w.pi_y = match_i_p_inv(o1, o2);
      break;
    case Algorithm::IPRandom:
      w.pi_y = match_i_p_rand(o1, o2, cfg);
      break;
    case Algorithm::INPInverse:
    case Algorithm::INPRandom: {
      NegPerm r = a == Algorithm::INPInverse ? match_i_np_inv(o1, o2) : match_i_np_rand(o1, o2, cfg);
      w.nu_y = r.nu;
      w.pi_y = r.pi;
      break;
    }
    case Algorithm::PIInverse:
      w.pi_x = match_p_i_inv(o1, o2);
      break;
    case Algorithm::PIOneHot:
      w.pi_x = match_p_i_onehot(o1, o2);
      break;
    case Algorithm::NIInverse:
      w.nu_x = match_n_i_inv(o1, o2);
      break;
    case Algorithm::NIQuantum:
      w.nu_x = match_n_i_quantum(o1, o2, cfg);
      break;
    case Algorithm::NPIInverse:
    case Algorithm::NPIQuantum: {
      NegPerm r = a == Algorithm::NPIInverse ? match_np_i_inv(o1, o2) : match_np_i_quantum(o1, o2, cfg);
      w.nu_x = r.nu;
      w.pi_x = r.pi;
      break;
    }
    case Algorithm::PN: {
      InputPermOutputNeg r = match_p_n(o1, o2);
      w.pi_x = r.pi_x;
      w.nu_y = r.nu_y;
      break;
    }
    case Algorithm::NPInverse: {
      InputNegOutputPerm r = match_n_p_inv(o1, o2);
      w.nu_x = r.nu_x;
      w.pi_y = r.pi_y;
      break;
    }
    case Algorithm::BruteForce: {
      auto found = brute_force_match(inst.c1, inst.c2, inst.equiv);
      if (!found) throw PromiseViolation("brute force found no witness");
      w = *found;
      break;
    }
  }
  return w;
}

}  // namespace

MatchWitness random_witness(EquivType equiv, std::size_t n, Rng& rng) {
  MatchWitness w{equiv, {}, {}, {}, {}};
  if (negates(equiv.input)) w.nu_x = NegationMap::random(n, rng);
  if (permutes(equiv.input)) w.pi_x = PermutationMap::random(n, rng);
  if (negates(equiv.output)) w.nu_y = NegationMap::random(n, rng);
  if (permutes(equiv.output)) w.pi_y = PermutationMap::random(n, rng);
  return w;
}

Instance gen_instance(EquivType equiv, std::size_t n, std::size_t gates, std::uint64_t seed, InverseFlags inverses) {
  if (n < 1) throw std::invalid_argument("gen_instance: n must be at least 1");
  Rng rng(seed);
  Circuit c2 = random_circuit(n, gates, rng.next());
  MatchWitness planted = random_witness(equiv, n, rng);
  Circuit c1 = realize(c2, planted);
  Instance inst{equiv, c1, c2, std::nullopt, std::nullopt, std::move(planted), seed};
  if (inverses.c1) inst.c1_inverse = invert(inst.c1);
  if (inverses.c2) inst.c2_inverse = invert(inst.c2);
  return inst;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Trivial: return "trivial";
    case Algorithm::INOutputZero: return "i_n_zero";
    case Algorithm::IPInverse: return "i_p_inv";
    case Algorithm::IPRandom: return "i_p_rand";
    case Algorithm::INPInverse: return "i_np_inv";
    case Algorithm::INPRandom: return "i_np_rand";
    case Algorithm::PIInverse: return "p_i_inv";
    case Algorithm::PIOneHot: return "p_i_onehot";
    case Algorithm::NIInverse: return "n_i_inv";
    case Algorithm::NIQuantum: return "n_i_quantum";
    case Algorithm::NPIInverse: return "np_i_inv";
    case Algorithm::NPIQuantum: return "np_i_quantum";
    case Algorithm::PN: return "p_n";
    case Algorithm::NPInverse: return "n_p_inv";
    case Algorithm::BruteForce: return "brute_force";
  }
  return "unknown";
}

bool is_randomized(Algorithm a) {
  return a == Algorithm::IPRandom || a == Algorithm::INPRandom || is_quantum(a);
}

bool is_quantum(Algorithm a) { return a == Algorithm::NIQuantum || a == Algorithm::NPIQuantum; }

std::string_view to_string(MatchMode m) {
  switch (m) {
    case MatchMode::Auto: return "auto";
    case MatchMode::Classical: return "classical";
    case MatchMode::Quantum: return "quantum";
    case MatchMode::Brute: return "brute";
  }
  return "unknown";
}

MatchMode parse_match_mode(std::string_view text) {
  if (text == "auto") return MatchMode::Auto;
  if (text == "classical") return MatchMode::Classical;
  if (text == "quantum") return MatchMode::Quantum;
  if (text == "brute") return MatchMode::Brute;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

Algorithm select_algorithm(EquivType e, InverseFlags inv, MatchMode mode) {
  if (mode == MatchMode::Brute) return Algorithm::BruteForce;
  const auto none = [&](const std::string& why) {
    return NoAlgorithmError("no matching algorithm for " + e.to_string() + ": " + why);
  };
  if (e == kII) return Algorithm::Trivial;
  if (e == kIN) return Algorithm::INOutputZero;
  if (e == kIP) return inv.any() ? Algorithm::IPInverse : Algorithm::IPRandom;
  if (e == kINP) return inv.any() ? Algorithm::INPInverse : Algorithm::INPRandom;
  if (e == kPI) return inv.any() ? Algorithm::PIInverse : Algorithm::PIOneHot;
  if (e == kPN) return Algorithm::PN;
  if (e == kNI || e == kNPI) {
    const Algorithm inverse = e == kNI ? Algorithm::NIInverse : Algorithm::NPIInverse;
    const Algorithm quantum = e == kNI ? Algorithm::NIQuantum : Algorithm::NPIQuantum;
    if (mode == MatchMode::Quantum) return quantum;
    if (inv.any()) return inverse;
    if (mode == MatchMode::Classical) throw none("needs an inverse circuit for a classical algorithm");
    return quantum;
  }
  if (e == kNP) {
    if (inv.both()) return Algorithm::NPInverse;
    throw none("needs the inverses of both circuits");
  }
  throw none("intractable equivalence, use --mode brute");
}

MatchOutcome run_match(const Instance& inst, MatchMode mode, const MatchConfig& cfg, std::size_t trial,
                       std::size_t max_attempts) {
  const Algorithm algorithm = select_algorithm(inst.equiv, inst.inverses(), mode);
  const std::size_t n = inst.width();
  Oracle o1(inst.c1, inst.c1_inverse);
  Oracle o2(inst.c2, inst.c2_inverse);

  MatchOutcome out;
  out.record.trial = trial;
  out.record.equiv = inst.equiv;
  out.record.n = n;
  out.record.mode = mode;
  out.record.algorithm = algorithm;

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, max_attempts); ++attempt) {
    MatchConfig attempt_cfg = cfg;
    attempt_cfg.seed = attempt == 0 ? cfg.seed : derive_seed(cfg.seed, attempt);
    out.attempts = attempt + 1;
    try {
      MatchWitness w = run_algorithm(algorithm, inst, o1, o2, attempt_cfg);
      const VerifyMode vm = n <= kExhaustiveVerifyWidth ? VerifyMode::exhaustive()
                                                        : VerifyMode::sampled(kVerifySamples, cfg.seed);
      if (verify_witness(inst.c1, inst.c2, w, vm)) {
        out.witness = std::move(w);
        out.error.clear();
      } else {
        out.error = "recovered witness failed verification";
      }
      break;
    } catch (const AmbiguityError& e) {
      out.error = e.what();
    } catch (const NoPartnerError& e) {
      out.error = e.what();
    } catch (const MatchError& e) {
      out.error = e.what();
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  out.record.o1 = o1.counts();
  out.record.o2 = o2.counts();
  out.record.success = out.witness.has_value();
  out.record.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.n < 1) throw std::invalid_argument("run_bench: n must be at least 1");
  const std::size_t gates = config.gates == 0 ? 4 * config.n : config.gates;
  std::vector<BenchRecord> records;
  records.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const Instance inst = gen_instance(config.equiv, config.n, gates, derive_seed(config.seed, 2 * t), config.inverses);
    MatchConfig cfg;
    cfg.epsilon = config.epsilon;
    cfg.budget = config.budget;
    cfg.seed = derive_seed(config.seed, 2 * t + 1);
    records.push_back(run_match(inst, config.mode, cfg, t).record);
  }
  return records;
}

CollisionStats collision_bench(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 1 || n > 30) throw std::invalid_argument("collision_bench: n must be in [1, 30]");
  if (trials == 0) throw std::invalid_argument("collision_bench: trials must be positive");
  CollisionStats stats;
  stats.n = n;
  const std::uint64_t space = std::uint64_t{1} << n;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng(seed).split(t);
    const Circuit c2 = random_circuit(n, 4 * n, rng.next());
    MatchWitness w{kNI, NegationMap::random(n, rng), {}, {}, {}};
    const Circuit c1 = realize(c2, w);
    Oracle o1(c1);
    Oracle o2(c2);

    std::unordered_set<std::uint64_t> used1, used2, out1, out2;
    auto fresh = [&](std::unordered_set<std::uint64_t>& used) {
      std::uint64_t x = rng.bits(n);
      while (used.count(x) != 0) x = rng.bits(n);
      used.insert(x);
      return x;
    };
    std::uint64_t steps = 0;
    bool hit = false;
    while (!hit && used2.size() < space) {
      const std::uint64_t y1 = o1.query(BitVec(n, fresh(used1))).value();
      hit = out2.count(y1) != 0;
      out1.insert(y1);
      const std::uint64_t y2 = o2.query(BitVec(n, fresh(used2))).value();
      ++steps;
      hit = hit || out1.count(y2) != 0;
      out2.insert(y2);
    }
    stats.queries.push_back(steps);
  }
  std::vector<std::uint64_t> sorted = stats.queries;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  stats.median = sorted.size() % 2 == 1 ? static_cast<double>(sorted[mid])
                                        : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
  double sum = 0.0;
  for (std::uint64_t q : sorted) sum += static_cast<double>(q);
  stats.mean = sum / static_cast<double>(sorted.size());
  return stats;
}

std::string write_instance(const Instance& inst, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json m;
  m["equiv"] = inst.equiv.to_string();
  m["n"] = inst.width();
  m["seed"] = inst.seed;
  m["c1"] = "c1.real";
  m["c2"] = "c2.real";
  write_real_file((fs::path(dir) / "c1.real").string(), inst.c1);
  write_real_file((fs::path(dir) / "c2.real").string(), inst.c2);
  if (inst.c1_inverse) {
    m["c1_inverse"] = "c1_inv.real";
    write_real_file((fs::path(dir) / "c1_inv.real").string(), *inst.c1_inverse);
  }
  if (inst.c2_inverse) {
    m["c2_inverse"] = "c2_inv.real";
    write_real_file((fs::path(dir) / "c2_inv.real").string(), *inst.c2_inverse);
  }
  m["planted"] = nlohmann::json::parse(witness_to_json(inst.planted));
  const std::string path = (fs::path(dir) / "manifest.json").string();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << m.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
  return path;
}

Instance read_instance(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open " + manifest_path);
  nlohmann::json m;
  try {
    in >> m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("manifest: " + std::string(e.what()));
  }
  const fs::path base = fs::path(manifest_path).parent_path();
  auto circuit = [&](const char* key) -> std::optional<Circuit> {
    if (!m.contains(key)) return std::nullopt;
    return read_real_file((base / m.at(key).get<std::string>()).string());
  };
  try {
    Instance inst{EquivType::parse(m.at("equiv").get<std::string>()),
                  read_real_file((base / m.at("c1").get<std::string>()).string()),
                  read_real_file((base / m.at("c2").get<std::string>()).string()),
                  circuit("c1_inverse"),
                  circuit("c2_inverse"),
                  witness_from_json(m.at("planted").dump()),
                  m.value("seed", std::uint64_t{0})};
    if (inst.c1.width() != inst.c2.width()) throw std::invalid_argument("manifest: circuit widths differ");
    inst.planted.validate(inst.width());
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("manifest: " + std::string(e.what()));
  }
}

}  // namespace revmatch
