#include "revmatch/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "revmatch/random.hpp"

namespace revmatch {

namespace {

constexpr std::size_t kMaxSatVars = 24;

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Cnf::Cnf(std::size_t var_count, std::vector<Clause> clauses) : var_count_(var_count), clauses_(std::move(clauses)) {
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const Clause& clause = clauses_[c];
    if (clause.empty()) throw std::invalid_argument("clause " + std::to_string(c + 1) + " is empty");
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].var >= var_count_) {
        throw std::invalid_argument("clause " + std::to_string(c + 1) + " uses variable " +
                                    std::to_string(clause[i].var + 1) + " beyond " + std::to_string(var_count_));
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (clause[k].var == clause[i].var) {
          throw std::invalid_argument("clause " + std::to_string(c + 1) + " repeats variable " +
                                      std::to_string(clause[i].var + 1));
        }
      }
    }
  }
}

bool Cnf::evaluate(const Assignment& a) const {
  if (a.size() != var_count_) throw std::invalid_argument("assignment size differs from variable count");
  for (const Clause& clause : clauses_) {
    bool sat = false;
    for (const Literal& l : clause) sat = sat || (a[l.var] != l.negated);
    if (!sat) return false;
  }
  return true;
}

bool Cnf::evaluate_bits(std::uint64_t bits) const {
  for (const Clause& clause : clauses_) {
    bool sat = false;
    for (const Literal& l : clause) sat = sat || ((((bits >> l.var) & 1U) != 0) != l.negated);
    if (!sat) return false;
  }
  return true;
}

Cnf parse_dimacs(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("dimacs line " + std::to_string(line_no) + ": " + what);
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c" || toks[0][0] == 'c') continue;
    if (toks[0] == "%") break;  // SATLIB trailer
    if (toks[0] == "p") {
      if (header) fail("duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf") fail("malformed header, expected 'p cnf <vars> <clauses>'");
      const auto v = parse_int(toks[2]);
      const auto c = parse_int(toks[3]);
      if (!v || !c || *v < 0 || *c < 0) fail("malformed header counts");
      header = {static_cast<std::size_t>(*v), static_cast<std::size_t>(*c)};
      continue;
    }
    if (!header) fail("clause before 'p cnf' header");
    for (std::string_view tok : toks) {
      const auto lit = parse_int(tok);
      if (!lit) fail("bad literal '" + std::string(tok) + "'");
      if (*lit == 0) {
        if (current.empty()) fail("zero-length clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = *lit < 0 ? -*lit : *lit;
      if (static_cast<std::size_t>(var) > header->first) fail("literal " + std::string(tok) + " out of range");
      current.push_back({static_cast<std::size_t>(var - 1), *lit < 0});
    }
  }
  if (!header) throw std::invalid_argument("dimacs: missing 'p cnf' header");
  if (!current.empty()) throw std::invalid_argument("dimacs: last clause is not terminated by 0");
  if (clauses.size() != header->second) {
    throw std::invalid_argument("dimacs: header declares " + std::to_string(header->second) + " clauses, found " +
                                std::to_string(clauses.size()));
  }
  return Cnf(header->first, std::move(clauses));
}

std::string write_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.var_count() << ' ' << cnf.clause_count() << '\n';
  for (const Clause& clause : cnf.clauses()) {
    for (const Literal& l : clause) os << (l.negated ? "-" : "") << l.var + 1 << ' ';
    os << "0\n";
  }
  return os.str();
}

Cnf read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

Cnf dual_rail(const Cnf& phi) {
  const std::size_t n = phi.var_count();
  std::vector<Clause> clauses = phi.clauses();
  for (std::size_t j = 0; j < n; ++j) {
    clauses.push_back({{j, false}, {n + j, false}});
    clauses.push_back({{j, true}, {n + j, true}});
  }
  return Cnf(2 * n, std::move(clauses));
}

SatCount brute_force_sat(const Cnf& phi) {
  const std::size_t n = phi.var_count();
  if (n > kMaxSatVars) throw std::invalid_argument("brute_force_sat: too many variables");
  SatCount out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (!phi.evaluate_bits(bits)) continue;
    if (out.models++ == 0) {
      Assignment a(n);
      for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1U;
      out.first = std::move(a);
    }
  }
  return out;
}

Cnf random_cnf(std::size_t var_count, std::size_t clause_count, std::size_t max_clause_len, Rng& rng) {
  if (var_count == 0 || max_clause_len == 0) throw std::invalid_argument("random_cnf: empty variable set");
  std::vector<Clause> clauses;
  std::vector<std::size_t> vars(var_count);
  for (std::size_t c = 0; c < clause_count; ++c) {
    const std::size_t len = 1 + rng.below(std::min(max_clause_len, var_count));
    for (std::size_t v = 0; v < var_count; ++v) vars[v] = v;
    Clause clause;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t pick = i + rng.below(var_count - i);
      std::swap(vars[i], vars[pick]);
      clause.push_back({vars[i], rng.coin()});
    }
    std::sort(clause.begin(), clause.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
    clauses.push_back(std::move(clause));
  }
  return Cnf(var_count, std::move(clauses));
}

std::string to_string(const Assignment& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i] ? '1' : '0';
  }
  return out + "]";
}

}  // namespace revmatch
