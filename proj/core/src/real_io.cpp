#include "revmatch/real_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace revmatch {
namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string variable_name(std::size_t i, std::size_t width) {
  if (width <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

// Transposition sequence whose left-to-right application realizes `pi`.
std::vector<std::pair<std::size_t, std::size_t>> swap_sequence(const PermutationMap& pi) {
  const std::size_t n = pi.width();
  const PermutationMap inv = pi.inverse();
  std::vector<std::size_t> content(n);  // content[w]: source wire whose value sits on w
  std::vector<std::size_t> where(n);    // where[s]: wire currently holding source s
  for (std::size_t w = 0; w < n; ++w) content[w] = where[w] = w;
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t wanted = inv(w);
    if (content[w] == wanted) continue;
    const std::size_t p = where[wanted];
    swaps.emplace_back(w, p);
    std::swap(content[w], content[p]);
    where[content[w]] = w;
    where[content[p]] = p;
  }
  return swaps;
}

void write_gate(std::ostringstream& os, const MctGate& g, std::size_t width) {
  os << 't' << g.controls().size() + 1;
  for (const ControlLine& c : g.controls()) {
    os << ' ' << (c.polarity == Polarity::Negative ? "-" : "") << variable_name(c.wire, width);
  }
  os << ' ' << variable_name(g.target(), width) << '\n';
}

}  // namespace

Circuit parse_real(std::string_view text) {
  std::optional<std::size_t> numvars;
  std::map<std::string, std::size_t> vars;
  std::optional<Circuit> circuit;
  bool ended = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const std::string& head = tokens[0];

    if (ended) throw ParseError(line_no, "content after .end");

    if (head == ".version" || head == ".inputs" || head == ".outputs" || head == ".constants" ||
        head == ".garbage") {
      continue;
    }
    if (head == ".numvars") {
      if (tokens.size() != 2) throw ParseError(line_no, "malformed .numvars");
      numvars = parse_count(tokens[1]);
      if (!numvars || *numvars == 0 || *numvars > kMaxWidth) {
        throw ParseError(line_no, "bad variable count '" + tokens[1] + "'");
      }
      continue;
    }
    if (head == ".variables") {
      if (!numvars) throw ParseError(line_no, ".variables before .numvars");
      if (tokens.size() - 1 != *numvars) throw ParseError(line_no, ".variables count differs from .numvars");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i][0] == '-') throw ParseError(line_no, "variable name may not start with '-'");
        if (!vars.emplace(tokens[i], i - 1).second) throw ParseError(line_no, "duplicate variable " + tokens[i]);
      }
      continue;
    }
    if (head == ".begin") {
      if (!numvars || vars.empty()) throw ParseError(line_no, ".begin before .numvars/.variables");
      if (circuit) throw ParseError(line_no, "duplicate .begin");
      circuit.emplace(*numvars);
      continue;
    }
    if (head == ".end") {
      if (!circuit) throw ParseError(line_no, ".end without .begin");
      ended = true;
      continue;
    }
    if (head[0] == '.') throw ParseError(line_no, "unknown directive " + head);

    if (!circuit) throw ParseError(line_no, "gate outside .begin/.end");
    if (head.size() < 2 || head[0] != 't') throw ParseError(line_no, "unsupported gate '" + head + "'");
    const auto k = parse_count(std::string_view(head).substr(1));
    if (!k || *k == 0) throw ParseError(line_no, "bad gate size in '" + head + "'");
    if (tokens.size() - 1 != *k) {
      throw ParseError(line_no, head + " expects " + std::to_string(*k) + " operands, got " +
                                    std::to_string(tokens.size() - 1));
    }
    auto lookup = [&](std::string_view name) {
      auto it = vars.find(std::string(name));
      if (it == vars.end()) throw ParseError(line_no, "unknown variable '" + std::string(name) + "'");
      return it->second;
    };
    std::vector<ControlLine> controls;
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
      std::string_view tok = tokens[i];
      Polarity pol = Polarity::Positive;
      if (tok[0] == '-') {
        pol = Polarity::Negative;
        tok.remove_prefix(1);
      }
      controls.push_back({lookup(tok), pol});
    }
    if (tokens.back()[0] == '-') throw ParseError(line_no, "target may not carry a polarity");
    const std::size_t target = lookup(tokens.back());
    try {
      circuit->add(MctGate(target, std::move(controls)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing .begin");
  if (!ended) throw ParseError(line_no, "missing .end");
  return std::move(*circuit);
}

std::string write_real(const Circuit& c) {
  std::ostringstream os;
  const std::size_t n = c.width();
  os << ".version 2.0\n.numvars " << n << "\n.variables";
  for (std::size_t i = 0; i < n; ++i) os << ' ' << variable_name(i, n);
  os << "\n.begin\n";
  for (const CircuitElement& e : c.elements()) {
    if (const auto* g = std::get_if<MctGate>(&e)) {
      write_gate(os, *g, n);
      continue;
    }
    for (auto [i, j] : swap_sequence(std::get<Rewire>(e).map)) {
      write_gate(os, MctGate::cnot(i, j), n);
      write_gate(os, MctGate::cnot(j, i), n);
      write_gate(os, MctGate::cnot(i, j), n);
    }
  }
  os << ".end\n";
  return os.str();
}

Circuit read_real_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_real(buf.str());
}

void write_real_file(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_real(c);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace revmatch
