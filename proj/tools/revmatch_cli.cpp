#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "revmatch/brute_force.hpp"
#include "revmatch/cnf.hpp"
#include "revmatch/harness.hpp"
#include "revmatch/real_io.hpp"
#include "revmatch/reductions.hpp"
#include "revmatch/report.hpp"
#include "revmatch/witness_io.hpp"

using namespace revmatch;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

InverseFlags parse_inverses(const std::string& s) {
  if (s == "none") return {};
  if (s == "c1") return {true, false};
  if (s == "c2") return {false, true};
  if (s == "both") return {true, true};
  throw CLI::ValidationError("--inverses", "expected none, c1, c2 or both");
}

FailureBudget parse_budget(const std::string& s) {
  if (s == "per-decision") return FailureBudget::PerDecision;
  if (s == "union-bound") return FailureBudget::UnionBound;
  throw CLI::ValidationError("--budget", "expected per-decision or union-bound");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string counts_json(const QueryCounts& c) {
  nlohmann::json j{{"classical", c.classical}, {"inverse", c.inverse}, {"quantum", c.quantum}};
  return j.dump();
}

nlohmann::json layout_json(const ReductionLayout& l) {
  return {{"kind", l.kind == ReductionLayout::Kind::NN ? "N-N" : "P-P"},
          {"width", l.width},
          {"x", l.x_wires},
          {"y", l.y_wires},
          {"a", l.a_wires},
          {"b", l.b_wire},
          {"z", l.z_wire}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean matching of black-box reversible circuits"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a planted instance (circuits + manifest)");
  std::string gen_equiv = "N-I", gen_out = "instance", gen_inv = "none";
  std::size_t gen_n = 4, gen_gates = 0;
  std::uint64_t gen_seed = kDefaultSeed;
  gen->add_option("--equiv", gen_equiv, "Equivalence X-Y")->capture_default_str();
  gen->add_option("--n", gen_n, "Circuit width")->capture_default_str()->check(CLI::Range(1, 64));
  gen->add_option("--gates", gen_gates, "Gate count of C2 (0 = 4n)")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--inverses", gen_inv, "Write inverse circuits: none, c1, c2, both")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->capture_default_str();

  // match
  auto* match = app.add_subcommand("match", "Recover a witness through oracle queries");
  std::string m_manifest, m_c1, m_c2, m_inv1, m_inv2, m_equiv, m_mode = "auto", m_out, m_budget = "per-decision";
  double m_eps = 0.05;
  std::uint64_t m_seed = kDefaultSeed;
  match->add_option("--manifest", m_manifest, "Instance manifest written by gen");
  match->add_option("--c1", m_c1, "C1 .real file");
  match->add_option("--c2", m_c2, "C2 .real file");
  match->add_option("--inv1", m_inv1, "Inverse of C1 (.real)");
  match->add_option("--inv2", m_inv2, "Inverse of C2 (.real)");
  match->add_option("--equiv", m_equiv, "Equivalence X-Y (required without --manifest)");
  match->add_option("--mode", m_mode, "auto, classical, quantum or brute")->capture_default_str();
  match->add_option("--epsilon", m_eps, "Failure probability")->capture_default_str();
  match->add_option("--budget", m_budget, "per-decision or union-bound")->capture_default_str();
  match->add_option("--seed", m_seed, "Random seed")->capture_default_str();
  match->add_option("--out", m_out, "Write the witness to this file");

  // verify
  auto* verify = app.add_subcommand("verify", "Check C1 == C_Y C2 C_X for a witness");
  std::string v_c1, v_c2, v_witness;
  std::size_t v_samples = 0;
  std::uint64_t v_seed = kDefaultSeed;
  verify->add_option("--c1", v_c1, "C1 .real file")->required();
  verify->add_option("--c2", v_c2, "C2 .real file")->required();
  verify->add_option("--witness", v_witness, "Witness JSON")->required();
  verify->add_option("--samples", v_samples, "Sampled check with this many inputs (0 = exhaustive)");
  verify->add_option("--seed", v_seed, "Sampling seed")->capture_default_str();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the N-N or P-P matching instance of a CNF");
  std::string r_cnf, r_kind = "nn", r_out = "reduction";
  reduce->add_option("--cnf", r_cnf, "DIMACS file")->required();
  reduce->add_option("--kind", r_kind, "nn or pp")->capture_default_str();
  reduce->add_option("--out", r_out, "Output directory")->capture_default_str();

  // extract
  auto* extract = app.add_subcommand("extract", "Read a satisfying assignment off a witness");
  std::string e_cnf, e_kind = "nn", e_witness;
  bool e_brute = false;
  extract->add_option("--cnf", e_cnf, "DIMACS file")->required();
  extract->add_option("--kind", e_kind, "nn or pp")->capture_default_str();
  extract->add_option("--witness", e_witness, "Witness JSON for the built instance");
  extract->add_flag("--brute", e_brute, "Find the witness by exhaustive search instead");

  // bench
  auto* bench = app.add_subcommand("bench", "Run planted trials and emit a CSV of query counts");
  std::string b_equiv = "N-I", b_mode = "auto", b_inv = "none", b_out, b_budget = "per-decision";
  std::size_t b_n = 4, b_gates = 0, b_trials = 100;
  std::uint64_t b_seed = kDefaultSeed;
  double b_eps = 0.05;
  bool b_no_timing = false;
  bench->add_option("--equiv", b_equiv, "Equivalence X-Y")->capture_default_str();
  bench->add_option("--n", b_n, "Circuit width")->capture_default_str()->check(CLI::Range(1, 64));
  bench->add_option("--gates", b_gates, "Gate count of C2 (0 = 4n)")->capture_default_str();
  bench->add_option("--trials", b_trials, "Number of instances")->capture_default_str();
  bench->add_option("--seed", b_seed, "Random seed")->capture_default_str();
  bench->add_option("--mode", b_mode, "auto, classical, quantum or brute")->capture_default_str();
  bench->add_option("--inverses", b_inv, "Available inverses: none, c1, c2, both")->capture_default_str();
  bench->add_option("--epsilon", b_eps, "Failure probability")->capture_default_str();
  bench->add_option("--budget", b_budget, "per-decision or union-bound")->capture_default_str();
  bench->add_option("--out", b_out, "CSV path (default stdout)");
  bench->add_flag("--no-timing", b_no_timing, "Write 0 for wall time so reruns are byte-identical");

  // collide
  auto* collide = app.add_subcommand("collide", "Classical collision search for the N-I negation");
  std::vector<std::size_t> c_n{8, 10, 12, 14};
  std::size_t c_trials = 500;
  std::uint64_t c_seed = kDefaultSeed;
  collide->add_option("--n", c_n, "Widths")->capture_default_str();
  collide->add_option("--trials", c_trials, "Trials per width")->capture_default_str();
  collide->add_option("--seed", c_seed, "Random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const Instance inst = gen_instance(EquivType::parse(gen_equiv), gen_n, gen_gates == 0 ? 4 * gen_n : gen_gates,
                                         gen_seed, parse_inverses(gen_inv));
      std::cout << write_instance(inst, gen_out) << '\n';
      return 0;
    }

    if (*match) {
      std::optional<Instance> inst;
      if (!m_manifest.empty()) {
        inst = read_instance(m_manifest);
        if (!m_equiv.empty()) inst->equiv = EquivType::parse(m_equiv);
      } else {
        if (m_c1.empty() || m_c2.empty() || m_equiv.empty()) {
          throw CLI::ValidationError("match", "give --manifest, or --c1, --c2 and --equiv");
        }
        const Circuit c1 = read_real_file(m_c1), c2 = read_real_file(m_c2);
        if (c1.width() != c2.width()) throw std::invalid_argument("C1 and C2 have different widths");
        inst = Instance{EquivType::parse(m_equiv), c1, c2, std::nullopt, std::nullopt,
                        MatchWitness{EquivType::parse(m_equiv), {}, {}, {}, {}}, m_seed};
      }
      if (!m_inv1.empty()) inst->c1_inverse = read_real_file(m_inv1);
      if (!m_inv2.empty()) inst->c2_inverse = read_real_file(m_inv2);
      MatchConfig cfg;
      cfg.epsilon = m_eps;
      cfg.seed = m_seed;
      cfg.budget = parse_budget(m_budget);
      cfg.validate();
      const MatchOutcome out = run_match(*inst, parse_match_mode(m_mode), cfg);
      std::cerr << "algorithm " << to_string(out.record.algorithm) << ", attempts " << out.attempts << ", C1 queries "
                << counts_json(out.record.o1) << ", C2 queries " << counts_json(out.record.o2) << '\n';
      if (!out.witness) {
        std::cerr << "match failed: " << out.error << '\n';
        return 1;
      }
      if (!m_out.empty()) write_witness_file(m_out, *out.witness);
      std::cout << witness_to_json(*out.witness) << '\n';
      return 0;
    }

    if (*verify) {
      const Circuit c1 = read_real_file(v_c1), c2 = read_real_file(v_c2);
      const MatchWitness w = read_witness_file(v_witness);
      const VerifyMode mode = v_samples == 0 ? VerifyMode::exhaustive() : VerifyMode::sampled(v_samples, v_seed);
      const bool ok = verify_witness(c1, c2, w, mode);
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 1;
    }

    if (*reduce) {
      const Cnf phi = read_dimacs_file(r_cnf);
      if (r_kind != "nn" && r_kind != "pp") throw CLI::ValidationError("--kind", "expected nn or pp");
      const ReductionInstance inst = r_kind == "nn" ? build_nn_instance(phi) : build_pp_instance(phi);
      fs::create_directories(r_out);
      write_real_file((fs::path(r_out) / "c1.real").string(), inst.c1);
      write_real_file((fs::path(r_out) / "c2.real").string(), inst.c2);
      write_text((fs::path(r_out) / "layout.json").string(), layout_json(inst.layout).dump(2) + "\n");
      std::cout << "width " << inst.layout.width << ", C1 gates " << inst.c1.gate_count() << ", written to " << r_out
                << '\n';
      return 0;
    }

    if (*extract) {
      const Cnf phi = read_dimacs_file(e_cnf);
      if (e_kind != "nn" && e_kind != "pp") throw CLI::ValidationError("--kind", "expected nn or pp");
      const bool nn = e_kind == "nn";
      std::optional<MatchWitness> w;
      if (e_brute) {
        const ReductionInstance inst = nn ? build_nn_instance(phi) : build_pp_instance(phi);
        w = brute_force_match(inst.c1, inst.c2, EquivType::parse(nn ? "N-N" : "P-P"));
      } else if (!e_witness.empty()) {
        w = read_witness_file(e_witness);
      } else {
        throw CLI::ValidationError("extract", "give --witness or --brute");
      }
      const std::optional<Assignment> a =
          w ? (nn ? extract_assignment_nn(phi, *w) : extract_assignment_pp(phi, *w)) : std::nullopt;
      std::cout << (a ? to_string(*a) : "UNSAT") << '\n';
      return a ? 0 : 2;
    }

    if (*bench) {
      BenchConfig cfg;
      cfg.equiv = EquivType::parse(b_equiv);
      cfg.n = b_n;
      cfg.gates = b_gates;
      cfg.trials = b_trials;
      cfg.seed = b_seed;
      cfg.mode = parse_match_mode(b_mode);
      cfg.inverses = parse_inverses(b_inv);
      cfg.epsilon = b_eps;
      cfg.budget = parse_budget(b_budget);
      MatchConfig check;
      check.epsilon = cfg.epsilon;
      check.validate();
      const auto records = run_bench(cfg);
      const ReportOptions opts{b_no_timing};
      if (b_out.empty()) {
        std::cout << to_csv(records, opts);
      } else {
        write_csv_file(b_out, records, opts);
      }
      std::cerr << summary(records);
      return 0;
    }

    if (*collide) {
      std::cout << "n,trials,median,mean\n";
      for (std::size_t n : c_n) {
        const CollisionStats s = collision_bench(n, c_trials, c_seed);
        std::printf("%zu,%zu,%.1f,%.2f\n", n, c_trials, s.median, s.mean);
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const NoAlgorithmError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
