#pragma once

#include <string>
#include <vector>

#include "twistcent/strata.hpp"

namespace twistcent {

// Raised when the nonempty twist tuples fail to form a subgroup. That is an
// engine bug, never a valid output: witnesses multiply and invert, so the
// nonempty set is closed by construction of the mathematics.
struct ClosureError : std::logic_error {
  using std::logic_error::logic_error;
};

// pi_0 of the centralizer, read off as the group of nonempty twist tuples.
// Delta_0 is the unit group of the commutant algebra, hence connected, so
// each nonempty stratum contributes exactly one component.
struct ComponentGroupReport {
  unsigned n = 0;
  unsigned m = 0;
  unsigned field_order = 0;
  unsigned centralizer_dim = 0;            // dim of the zero-twist space
  std::vector<Stratum> strata;             // all m^k, ordered lex by twist
  std::vector<TwistTuple> nonempty_twists; // status nonempty-with-witness
  std::vector<TwistTuple> subgroup_generators;
  std::vector<unsigned> invariant_factors; // ascending, each divides the next
  std::string iso_label;

  const Stratum& stratum(const TwistTuple& twist) const;
};

// Solves all m^k strata, verifies subgroup closure of the nonempty set, and
// reports the invariant factors of the resulting finite abelian group.
ComponentGroupReport component_group(const GeneratorSet& gens,
                                     const WitnessSearch& search = {});

// "trivial" for no factors, otherwise "Z/d1Z x Z/d2Z x ...".
std::string classify_label(const std::vector<unsigned>& invariant_factors);

// Smith normal form diagonal of an integer matrix: nonnegative entries,
// each dividing the next, of length min(rows, cols).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> mat);

}  // namespace twistcent
