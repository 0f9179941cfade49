#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcent/families.hpp"
#include "twistcent/strata.hpp"

namespace twistcent {

// Syntax error in a problem file; line and col are 1-based.
struct ProblemParseError : std::runtime_error {
  unsigned line, col;
  ProblemParseError(const std::string& msg, unsigned l, unsigned c)
      : std::runtime_error(msg), line(l), col(c) {}
};

// A parsed problem: a line-oriented key/value file declaring either an
// explicit generator list or a family invocation.
//
//   # comment
//   order = 3
//   dim = 3
//   gen = [[z,0,0],[0,z^2,0],[0,0,1]]      (repeatable)
// or
//   family = principal-series
//   param.a1 = 2
//   param.a2 = 3
// plus optional
//   expected = trivial
//   seed = 0
struct ProblemFile {
  unsigned order = 3;
  unsigned dim = 3;
  std::vector<Matrix> gens;
  std::optional<FamilySpec> family;
  std::optional<std::string> expected;
  std::optional<std::uint64_t> seed;
  std::string case_label = "custom";
};

// Throws ProblemParseError for syntax errors and std::invalid_argument for
// semantic violations (both modes present, dimension mismatch, unknown
// family id, and so on). Singular generators are rejected later, when the
// GeneratorSet is built.
ProblemFile parse_problem(std::string_view text);

// Builds the generator set from whichever mode the problem declares.
GeneratorSet problem_generator_set(const ProblemFile& problem);

// Parses a matrix literal [[..],[..]] whose entries use the cyclotomic
// expression grammar. Exposed for tests and the python bindings.
Matrix parse_matrix_literal(std::string_view text, unsigned order);

}  // namespace twistcent
