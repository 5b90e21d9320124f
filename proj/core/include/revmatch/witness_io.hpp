#pragma once

#include <string>
#include <string_view>

#include "revmatch/equivalence.hpp"

namespace revmatch {

// Witness text format (JSON):
//
//   {"equiv": "NP-I", "nu_x": [0, 1, 0], "pi_x": [2, 0, 1]}
//
// `nu_*` hold one 0/1 flag per wire, `pi_*` the image wire of each wire. Only
// the arrays demanded by `equiv` may appear.
std::string witness_to_json(const MatchWitness& w);
/// Throws std::invalid_argument on malformed JSON or a witness of the wrong shape.
MatchWitness witness_from_json(std::string_view text);

MatchWitness read_witness_file(const std::string& path);
void write_witness_file(const std::string& path, const MatchWitness& w);

}  // namespace revmatch
