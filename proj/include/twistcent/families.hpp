#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "twistcent/strata.hpp"

namespace twistcent {

// Built-in finite generator presentations for the non-supercuspidal tempered
// parameter images of SL_3, keyed by character values. Each family is the
// exact matrix set the corresponding case analysis manipulates.
enum class FamilyId {
  PrincipalSeries,  // one diagonal generator diag(a1, a2, 1)
  Steinberg3,       // Sym^2 images of diag(2, 1/2) and a generic SL_2 element
  DihedralChi,      // dihedral pair plus character block c
  TetrahedralChi,   // tetrahedral pair plus character block c
  OctahedralChi,    // same matrices as tetrahedral: A4 < S4, answer unchanged
  Steinberg2Chi,    // GL_2 block representatives plus trivial corner
};

std::optional<FamilyId> family_from_name(std::string_view name);
std::string family_name(FamilyId id);

struct FamilySpec {
  FamilyId id;
  // a1, a2 for principal-series; c for the +chi families; k for
  // steinberg2-chi (recorded in the case label, immaterial to the strata).
  std::map<std::string, Cyclotomic> params;
  unsigned order = 3;  // cyclotomic order of the emitted matrices
  std::optional<std::string> expected;  // iso label for regression mode
};

// Case name carrying the character values, e.g. "dihedral-chi(c=5)".
std::string family_case_label(const FamilySpec& spec);

// Emits the finite surrogate generator set; validates the family's
// parameter conditions and names the violated condition on failure.
GeneratorSet build_family(const FamilySpec& spec);

// Appends probe generators one at a time, keeping the ones that change any
// stratum dimension, until a full pass changes nothing. Probes that leave
// every dimension fixed certify that the finite surrogate has stabilized.
GeneratorSet stabilize(const GeneratorSet& gens,
                       const std::vector<Matrix>& extra);

}  // namespace twistcent
