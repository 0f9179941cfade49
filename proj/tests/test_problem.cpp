#include "twistcent/problem.hpp"

#include "doctest.h"
#include "json.hpp"
#include "twistcent/report.hpp"

using namespace twistcent;

TEST_CASE("problem files in generator mode") {
  const ProblemFile p = parse_problem(
      "# cube-root principal series\n"
      "order = 3\n"
      "dim = 3\n"
      "gen = [[z,0,0],[0,z^2,0],[0,0,1]]\n");
  CHECK(p.order == 3);
  CHECK(p.dim == 3);
  CHECK(p.gens.size() == 1);
  CHECK(p.case_label == "custom");
  const GeneratorSet gens = problem_generator_set(p);
  CHECK(gens.generators()[0] ==
        parse_matrix_literal("[[z,0,0],[0,z^2,0],[0,0,1]]", 3));
}

TEST_CASE("problem files in family mode") {
  const ProblemFile p = parse_problem(
      "family = principal-series\n"
      "param.a1 = 2\n"
      "param.a2 = 3\n");
  REQUIRE(p.family.has_value());
  CHECK(p.case_label == "principal-series(a1=2,a2=3)");
  const GeneratorSet gens = problem_generator_set(p);
  CHECK(gens.count() == 1);
  CHECK(gens.generators()[0] ==
        parse_matrix_literal("[[2,0,0],[0,3,0],[0,0,1]]", 3));
}

TEST_CASE("problem parse errors carry line and column") {
  try {
    parse_problem("order = 3\ndim = 3\ngen = [[z,0,0],[0,q,0],[0,0,1]]\n");
    FAIL("expected a parse error");
  } catch (const ProblemParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 19);  // the 'q'
  }
  CHECK_THROWS_AS(parse_problem("order 3\n"), ProblemParseError);
  CHECK_THROWS_AS(parse_problem("order = 3\norder = 4\n"), ProblemParseError);
  CHECK_THROWS_AS(parse_problem("mystery = 1\n"), ProblemParseError);
}

TEST_CASE("problem validation errors") {
  // Singular generators are rejected when the set is built.
  const ProblemFile sing = parse_problem(
      "order = 3\ndim = 3\ngen = [[1,1,0],[2,2,0],[0,0,1]]\n");
  CHECK_THROWS_AS(problem_generator_set(sing), std::invalid_argument);
  const ProblemFile sing2 =
      parse_problem("order = 2\ndim = 2\ngen = [[1,1],[2,2]]\n");
  CHECK_THROWS_WITH_AS(problem_generator_set(sing2),
                       doctest::Contains("singular generator"),
                       std::invalid_argument);
  // Dimension mismatch.
  CHECK_THROWS_AS(parse_problem("order = 3\ndim = 3\ngen = [[1,1],[2,3]]\n"),
                  std::invalid_argument);
  // Unknown family.
  CHECK_THROWS_AS(parse_problem("family = icosahedral\n"), std::invalid_argument);
  // Both modes at once.
  CHECK_THROWS_AS(
      parse_problem("family = steinberg3\ngen = [[1,0,0],[0,1,0],[0,0,1]]\n"),
      std::invalid_argument);
  // Neither mode.
  CHECK_THROWS_AS(parse_problem("order = 3\ndim = 3\n"), std::invalid_argument);
}

TEST_CASE("parse and print round-trip problem semantics") {
  const std::string text =
      "order = 3\n"
      "dim = 3\n"
      "gen = [[z,0,0],[0,z^2,0],[0,0,1]]\n"
      "gen = [[0,1,0],[0,0,1],[1,0,0]]\n";
  const ProblemFile p = parse_problem(text);
  std::string regenerated = "order = 3\ndim = 3\n";
  for (const Matrix& g : p.gens)
    regenerated += "gen = " + g.to_string() + "\n";
  const ProblemFile q = parse_problem(regenerated);
  REQUIRE(q.gens.size() == p.gens.size());
  for (std::size_t i = 0; i < p.gens.size(); ++i) CHECK(p.gens[i] == q.gens[i]);
}

TEST_CASE("family problems round-trip through canonical forms") {
  const ProblemFile p =
      parse_problem("family = tetrahedral-chi\nparam.c = 3+2*z^2\n");
  std::string regen = "family = tetrahedral-chi\n";
  for (const auto& [key, value] : p.family->params)
    regen += "param." + key + " = " + value.to_string() + "\n";
  const ProblemFile q = parse_problem(regen);
  CHECK(problem_generator_set(p).generators() ==
        problem_generator_set(q).generators());
  CHECK(p.case_label == q.case_label);
}

TEST_CASE("report emission is deterministic and has the fixed key order") {
  const GeneratorSet gens = problem_generator_set(parse_problem(
      "order = 3\ndim = 3\ngen = [[z,0,0],[0,z^2,0],[0,0,1]]\n"));
  const ComponentGroupReport rep = component_group(gens);
  const std::string once = emit_report("custom", rep, ReportFormat::Json);
  const std::string twice = emit_report("custom", rep, ReportFormat::Json);
  CHECK(once == twice);
  const auto j = nlohmann::json::parse(once);
  CHECK(j["case"] == "custom");
  CHECK(j["dim"] == 3);
  CHECK(j["order"] == 3);
  CHECK(j["centralizer_dim"] == 3);
  CHECK(j["invariant_factors"] == nlohmann::json::array({3}));
  CHECK(j["iso_label"] == "Z/3Z");
  CHECK(j["strata"].size() == 3);
  CHECK(j["strata"][1]["twist"] == nlohmann::json::array({1}));
  CHECK(j["strata"][1]["dim"] == 3);
  CHECK(j["strata"][1]["witness"] == "[[0,1,0],[0,0,1],[1,0,0]]");
  const std::vector<std::string> keys = {"case", "dim", "order",
                                         "centralizer_dim", "strata",
                                         "invariant_factors", "iso_label"};
  const auto ordered = nlohmann::ordered_json::parse(once);
  std::size_t i = 0;
  for (auto it = ordered.begin(); it != ordered.end(); ++it, ++i)
    CHECK(it.key() == keys.at(i));

  const std::string text = emit_report("custom", rep, ReportFormat::Text);
  CHECK(text.find("component group: Z/3Z") != std::string::npos);
  CHECK(text.find("witness [[0,1,0],[0,0,1],[1,0,0]]") != std::string::npos);

  const ComponentGroupReport trivial = component_group(problem_generator_set(
      parse_problem("order = 3\ndim = 3\ngen = [[2,0,0],[0,3,0],[0,0,1]]\n")));
  CHECK(emit_report("custom", trivial, ReportFormat::Text)
            .find("component group: trivial") != std::string::npos);
}

TEST_CASE("problem files carry expected labels and seeds") {
  const ProblemFile p = parse_problem(
      "order = 3\ndim = 3\ngen = [[2,0,0],[0,3,0],[0,0,1]]\n"
      "expected = trivial\nseed = 9\n");
  CHECK(p.expected == "trivial");
  REQUIRE(p.seed.has_value());
  CHECK(*p.seed == 9);
}

TEST_CASE("single-stratum report for the centralizer job") {
  const GeneratorSet gens = problem_generator_set(parse_problem(
      "family = dihedral-chi\nparam.c = 5\n"));
  const Stratum s = centralizer(gens);
  const std::string json =
      emit_stratum_report("dihedral-chi(c=5)", gens.n(), gens.field_order(),
                          s, ReportFormat::Json);
  const auto j = nlohmann::json::parse(json);
  CHECK(j["case"] == "dihedral-chi(c=5)");
  CHECK(j["centralizer_dim"] == 2);
  REQUIRE(j["strata"].size() == 1);
  CHECK(j["strata"][0]["twist"] == nlohmann::json::array({0, 0}));
  CHECK(j["strata"][0]["dim"] == 2);
  CHECK(j["strata"][0]["witness"] == "[[1,0,0],[0,1,0],[0,0,1]]");
  const std::string text =
      emit_stratum_report("dihedral-chi(c=5)", gens.n(), gens.field_order(),
                          s, ReportFormat::Text);
  CHECK(text.find("twist (0,0): dim 2, witness") != std::string::npos);
}

TEST_CASE("paper suite rows and negative control") {
  const PaperSuiteResult suite = run_paper_suite();
  REQUIRE(suite.rows.size() == 6);
  const std::vector<std::string> labels = {"trivial", "Z/3Z", "trivial",
                                           "trivial", "trivial", "trivial"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(suite.rows[i].iso_label == labels[i]);
    CHECK(suite.rows[i].matches);
  }
  CHECK(suite.all_match);

  const PaperSuiteResult sabotaged =
      run_paper_suite({}, {{"steinberg3", "Z/3Z"}});
  CHECK_FALSE(sabotaged.all_match);
  CHECK_FALSE(sabotaged.rows[2].matches);
}

TEST_CASE("paper suite json agrees with the text table") {
  const PaperSuiteResult suite = run_paper_suite();
  const auto j = nlohmann::json::parse(emit_paper_suite(suite, ReportFormat::Json));
  const std::string text = emit_paper_suite(suite, ReportFormat::Text);
  CHECK(j["suite"] == "paper");
  CHECK(j["all_match"] == true);
  REQUIRE(j["cases"].size() == 6);
  for (const auto& c : j["cases"]) {
    // Every structured row appears in the rendered table.
    const std::string case_label = c["case"].get<std::string>();
    CHECK(text.find(case_label) != std::string::npos);
    const std::string iso = c["iso_label"].get<std::string>();
    CHECK(text.find(iso) != std::string::npos);
    CHECK(c["matches"] == true);
  }
}
