#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistcent/component_group.hpp"

namespace twistcent {

enum class ReportFormat { Text, Json };

// Deterministic serialization of a component-group report: strata ordered
// lexicographically by twist tuple, matrices printed in the entry grammar,
// JSON keys in fixed order.
std::string emit_report(const std::string& case_label,
                        const ComponentGroupReport& report, ReportFormat fmt);

// Serialization of a single stratum (the `centralizer` subcommand).
std::string emit_stratum_report(const std::string& case_label, unsigned dim,
                                unsigned order, const Stratum& stratum,
                                ReportFormat fmt);

struct PaperSuiteRow {
  std::string case_label;
  unsigned n = 0;
  unsigned order = 0;
  unsigned centralizer_dim = 0;
  std::vector<TwistTuple> nonempty_twists;
  std::vector<unsigned> invariant_factors;
  std::string iso_label;
  std::string expected;
  bool matches = false;
};

struct PaperSuiteResult {
  std::uint64_t seed = 0;
  std::vector<PaperSuiteRow> rows;
  bool all_match = false;
};

// Runs the six built-in reference cases and checks each computed component
// group against its expected label. expect_overrides replaces the expected
// label for the named cases (a negative-control hook for tests).
PaperSuiteResult run_paper_suite(
    const WitnessSearch& search = {},
    const std::map<std::string, std::string>& expect_overrides = {});

std::string emit_paper_suite(const PaperSuiteResult& result, ReportFormat fmt);

}  // namespace twistcent
