#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twistcent/problem.hpp"
#include "twistcent/report.hpp"

namespace {

using namespace twistcent;

// Exit codes: 0 success, 1 mismatch or validation failure, 2 parse error.
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

struct CommonOptions {
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned trials = 32;
  long coeff_bound = 10;
};

void add_search_flags(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed,
                  "Seed for the randomized witness search")
      ->capture_default_str();
  cmd->add_option("--trials", opts->trials,
                  "Random combinations tried before the exact fallback")
      ->capture_default_str();
  cmd->add_option("--coeff-bound", opts->coeff_bound,
                  "Random combination coefficients lie in [-C, C]")
      ->capture_default_str();
}

ReportFormat format_of(const CommonOptions& opts) {
  return opts.format == "json" ? ReportFormat::Json : ReportFormat::Text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WitnessSearch search_of(const CommonOptions& opts, const ProblemFile& problem) {
  WitnessSearch search;
  search.trials = opts.trials;
  search.coeff_bound = opts.coeff_bound;
  search.seed = opts.seed;
  if (!opts.seed_given && problem.seed) search.seed = *problem.seed;
  return search;
}

int run_centralizer(const CommonOptions& opts) {
  const ProblemFile problem = parse_problem(read_file(opts.input));
  const GeneratorSet gens = problem_generator_set(problem);
  const Stratum stratum = centralizer(gens, search_of(opts, problem));
  std::cout << emit_stratum_report(problem.case_label, gens.n(),
                                   gens.field_order(), stratum, format_of(opts));
  return 0;
}

int run_component_group(const CommonOptions& opts) {
  const ProblemFile problem = parse_problem(read_file(opts.input));
  const GeneratorSet gens = problem_generator_set(problem);
  const ComponentGroupReport report =
      component_group(gens, search_of(opts, problem));
  std::cout << emit_report(problem.case_label, report, format_of(opts));
  if (problem.expected && *problem.expected != report.iso_label) {
    std::cerr << "expected component group '" << *problem.expected
              << "' but computed '" << report.iso_label << "'\n";
    return kExitValidation;
  }
  return 0;
}

int run_paper(const CommonOptions& opts,
              const std::vector<std::string>& expect_flags) {
  std::map<std::string, std::string> overrides;
  for (const std::string& flag : expect_flags) {
    const std::size_t eq = flag.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--expect takes CASE=LABEL, got '" + flag + "'");
    overrides[flag.substr(0, eq)] = flag.substr(eq + 1);
  }
  WitnessSearch search;
  search.trials = opts.trials;
  search.coeff_bound = opts.coeff_bound;
  search.seed = opts.seed;
  const PaperSuiteResult result = run_paper_suite(search, overrides);
  std::cout << emit_paper_suite(result, format_of(opts));
  return result.all_match ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact centralizer strata and component groups for finitely generated "
      "matrix subgroups of PGL_n over cyclotomic fields"};
  app.require_subcommand(1);

  CommonOptions cent_opts, group_opts, paper_opts;
  std::vector<std::string> expect_flags;

  CLI::App* cent = app.add_subcommand(
      "centralizer", "Solve the trivial-twist stratum of a problem file");
  cent->add_option("--input", cent_opts.input, "Problem file")->required();
  add_search_flags(cent, &cent_opts);

  CLI::App* group = app.add_subcommand(
      "component-group",
      "Solve all twist strata and report the component group");
  group->add_option("--input", group_opts.input, "Problem file")->required();
  add_search_flags(group, &group_opts);

  CLI::App* paper = app.add_subcommand(
      "paper", "Run the built-in reference families and check the "
               "classification table");
  add_search_flags(paper, &paper_opts);
  paper->add_option("--expect", expect_flags,
                    "Override an expected label as CASE=LABEL (testing aid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (cent->parsed()) {
      cent_opts.seed_given = cent->count("--seed") > 0;
      return run_centralizer(cent_opts);
    }
    if (group->parsed()) {
      group_opts.seed_given = group->count("--seed") > 0;
      return run_component_group(group_opts);
    }
    return run_paper(paper_opts, expect_flags);
  } catch (const ProblemParseError& e) {
    std::cerr << "parse error at line " << e.line << ", col " << e.col << ": "
              << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
