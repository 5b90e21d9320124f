#include "revmatch/witness_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace revmatch {

namespace {

using nlohmann::json;

}  // namespace

std::string witness_to_json(const MatchWitness& w) {
  json j;
  j["equiv"] = w.equiv.to_string();
  if (w.nu_x) j["nu_x"] = w.nu_x->flags();
  if (w.pi_x) j["pi_x"] = w.pi_x->images();
  if (w.nu_y) j["nu_y"] = w.nu_y->flags();
  if (w.pi_y) j["pi_y"] = w.pi_y->images();
  return j.dump();
}

MatchWitness witness_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("witness: ") + e.what());
  }
  if (!j.is_object() || !j.contains("equiv") || !j["equiv"].is_string()) {
    throw std::invalid_argument("witness: missing string field 'equiv'");
  }
  MatchWitness w{EquivType::parse(j["equiv"].get<std::string>()), {}, {}, {}, {}};
  std::optional<std::size_t> width;
  auto note_width = [&](std::size_t n) {
    if (width && *width != n) throw WitnessShapeError("witness arrays have different lengths");
    width = n;
  };
  try {
    if (j.contains("nu_x")) {
      w.nu_x = NegationMap::from_flags(j["nu_x"].get<std::vector<int>>());
      note_width(w.nu_x->width());
    }
    if (j.contains("pi_x")) {
      w.pi_x = PermutationMap(j["pi_x"].get<std::vector<std::size_t>>());
      note_width(w.pi_x->width());
    }
    if (j.contains("nu_y")) {
      w.nu_y = NegationMap::from_flags(j["nu_y"].get<std::vector<int>>());
      note_width(w.nu_y->width());
    }
    if (j.contains("pi_y")) {
      w.pi_y = PermutationMap(j["pi_y"].get<std::vector<std::size_t>>());
      note_width(w.pi_y->width());
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("witness: ") + e.what());
  }
  if (width) w.validate(*width);
  else if (w.equiv != EquivType{}) throw WitnessShapeError(w.equiv.to_string() + " witness has no components");
  return w;
}

MatchWitness read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return witness_from_json(buf.str());
}

void write_witness_file(const std::string& path, const MatchWitness& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << witness_to_json(w) << '\n';
}

}  // namespace revmatch
