#include "twistcent/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "twistcent/families.hpp"

namespace twistcent {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json twist_json(const TwistTuple& t) {
  ordered_json out = ordered_json::array();
  for (unsigned e : t.exponents()) out.push_back(e);
  return out;
}

ordered_json stratum_json(const Stratum& s) {
  ordered_json out;
  out["twist"] = twist_json(s.twist);
  out["dim"] = s.space.dimension();
  if (s.witness) out["witness"] = s.witness->to_string();
  return out;
}

void stratum_text_line(std::ostringstream& os, const Stratum& s) {
  os << "  twist " << s.twist.to_string() << ": ";
  if (s.status == StratumStatus::EmptySpace) {
    os << "empty\n";
  } else if (s.status == StratumStatus::NoInvertible) {
    os << "dim " << s.space.dimension() << ", no invertible element\n";
  } else {
    os << "dim " << s.space.dimension() << ", witness "
       << s.witness->to_string() << "\n";
  }
}

std::string factors_text(const std::vector<unsigned>& factors) {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(factors[i]);
  }
  return out + "]";
}

std::string twists_text(const std::vector<TwistTuple>& twists) {
  std::string out;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (i) out += ",";
    out += twists[i].to_string();
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_report(const std::string& case_label,
                        const ComponentGroupReport& report, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json j;
    j["case"] = case_label;
    j["dim"] = report.n;
    j["order"] = report.field_order;
    j["centralizer_dim"] = report.centralizer_dim;
    j["strata"] = ordered_json::array();
    for (const Stratum& s : report.strata)
      j["strata"].push_back(stratum_json(s));
    j["invariant_factors"] = report.invariant_factors;
    j["iso_label"] = report.iso_label;
    return dump(j);
  }
  std::ostringstream os;
  os << "case: " << case_label << "\n";
  os << "dim: " << report.n << "\n";
  os << "order: " << report.field_order << "\n";
  os << "centralizer dim: " << report.centralizer_dim << "\n";
  os << "strata:\n";
  for (const Stratum& s : report.strata) stratum_text_line(os, s);
  os << "nonempty twists: " << twists_text(report.nonempty_twists) << "\n";
  os << "invariant factors: " << factors_text(report.invariant_factors) << "\n";
  os << "component group: " << report.iso_label << "\n";
  return os.str();
}

std::string emit_stratum_report(const std::string& case_label, unsigned dim,
                                unsigned order, const Stratum& stratum,
                                ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json j;
    j["case"] = case_label;
    j["dim"] = dim;
    j["order"] = order;
    j["centralizer_dim"] = stratum.space.dimension();
    j["strata"] = ordered_json::array({stratum_json(stratum)});
    return dump(j);
  }
  std::ostringstream os;
  os << "case: " << case_label << "\n";
  os << "dim: " << dim << "\n";
  os << "order: " << order << "\n";
  os << "centralizer dim: " << stratum.space.dimension() << "\n";
  os << "strata:\n";
  stratum_text_line(os, stratum);
  return os.str();
}

PaperSuiteResult run_paper_suite(
    const WitnessSearch& search,
    const std::map<std::string, std::string>& expect_overrides) {
  struct Case {
    std::string label;
    FamilySpec spec;
    std::string expected;
  };

  const Cyclotomic z = Cyclotomic::zeta(3);
  std::vector<Case> cases;
  cases.push_back({"principal-series(a1=2,a2=3)",
                   FamilySpec{FamilyId::PrincipalSeries,
                              {{"a1", Cyclotomic(3, 2L)}, {"a2", Cyclotomic(3, 3L)}},
                              3, std::nullopt},
                   "trivial"});
  cases.push_back({"principal-series(a1=z,a2=z^2)",
                   FamilySpec{FamilyId::PrincipalSeries,
                              {{"a1", z}, {"a2", z * z}}, 3, std::nullopt},
                   "Z/3Z"});
  cases.push_back({"steinberg3",
                   FamilySpec{FamilyId::Steinberg3, {}, 3, std::nullopt},
                   "trivial"});
  cases.push_back({"dihedral-chi(c=5)",
                   FamilySpec{FamilyId::DihedralChi,
                              {{"c", Cyclotomic(3, 5L)}}, 3, std::nullopt},
                   "trivial"});
  cases.push_back({"tetrahedral/octahedral-chi(c=5)",
                   FamilySpec{FamilyId::TetrahedralChi,
                              {{"c", Cyclotomic(3, 5L)}}, 3, std::nullopt},
                   "trivial"});
  cases.push_back({"steinberg2-chi(k=5)",
                   FamilySpec{FamilyId::Steinberg2Chi,
                              {{"k", Cyclotomic(3, 5L)}}, 3, std::nullopt},
                   "trivial"});

  PaperSuiteResult result;
  result.seed = search.seed;
  result.all_match = true;
  for (const Case& c : cases) {
    const GeneratorSet gens = build_family(c.spec);
    const ComponentGroupReport report = component_group(gens, search);
    PaperSuiteRow row;
    row.case_label = c.label;
    row.n = report.n;
    row.order = report.field_order;
    row.centralizer_dim = report.centralizer_dim;
    row.nonempty_twists = report.nonempty_twists;
    row.invariant_factors = report.invariant_factors;
    row.iso_label = report.iso_label;
    auto ov = expect_overrides.find(c.label);
    row.expected = ov != expect_overrides.end() ? ov->second : c.expected;
    row.matches = (row.iso_label == row.expected);
    if (!row.matches) result.all_match = false;
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string emit_paper_suite(const PaperSuiteResult& result, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json j;
    j["suite"] = "paper";
    j["seed"] = result.seed;
    j["cases"] = ordered_json::array();
    for (const PaperSuiteRow& row : result.rows) {
      ordered_json c;
      c["case"] = row.case_label;
      c["dim"] = row.n;
      c["order"] = row.order;
      c["centralizer_dim"] = row.centralizer_dim;
      c["nonempty_twists"] = ordered_json::array();
      for (const TwistTuple& t : row.nonempty_twists)
        c["nonempty_twists"].push_back(twist_json(t));
      c["invariant_factors"] = row.invariant_factors;
      c["iso_label"] = row.iso_label;
      c["expected"] = row.expected;
      c["matches"] = row.matches;
      j["cases"].push_back(std::move(c));
    }
    j["all_match"] = result.all_match;
    return dump(j);
  }

  // Column-aligned table, one row per case.
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"case", "centralizer_dim", "nonempty_twists", "iso_label",
                   "matches-paper"});
  for (const PaperSuiteRow& row : result.rows)
    cells.push_back({row.case_label, std::to_string(row.centralizer_dim),
                     twists_text(row.nonempty_twists), row.iso_label,
                     row.matches ? "yes" : "no"});
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& r : cells)
    for (std::size_t i = 0; i < r.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size())
        os << std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << "\n";
  }
  os << "all cases match: " << (result.all_match ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace twistcent
