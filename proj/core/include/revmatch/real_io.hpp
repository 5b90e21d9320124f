#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "revmatch/circuit.hpp"

namespace revmatch {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// RevLib .real subset:
//
//   .version 2.0
//   .numvars 3
//   .variables a b c
//   .begin
//   t3 a -b c        # K tokens: K-1 controls then the target; '-' marks negative polarity
//   t1 b
//   .end
//
// '#' starts a comment line. .inputs/.outputs/.constants/.garbage are accepted
// and ignored.
Circuit parse_real(std::string_view text);

/// Rewire elements are written as CNOT swap triples.
std::string write_real(const Circuit& c);

Circuit read_real_file(const std::string& path);
void write_real_file(const std::string& path, const Circuit& c);

}  // namespace revmatch
