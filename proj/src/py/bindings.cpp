#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistcent/component_group.hpp"
#include "twistcent/families.hpp"
#include "twistcent/problem.hpp"
#include "twistcent/report.hpp"

namespace py = pybind11;
using namespace twistcent;

namespace {

Cyclotomic cyc_from_object(unsigned order, const py::object& value) {
  if (py::isinstance<Cyclotomic>(value)) {
    Cyclotomic c = value.cast<Cyclotomic>();
    if (c.order() != order)
      throw std::invalid_argument("mixed cyclotomic orders");
    return c;
  }
  if (py::isinstance<py::int_>(value))
    return Cyclotomic(order, value.cast<long>());
  if (py::isinstance<py::str>(value))
    return parse_cyclotomic(value.cast<std::string>(), order);
  throw std::invalid_argument("entry must be an int, a str expression, or a Cyclotomic");
}

Matrix matrix_from_rows(unsigned order, const py::sequence& rows) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& row : rows) {
    std::vector<Cyclotomic> r;
    for (const auto& entry : row.cast<py::sequence>())
      r.push_back(cyc_from_object(order, py::reinterpret_borrow<py::object>(entry)));
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(std::move(out));
}

TwistTuple twist_from_list(const std::vector<unsigned>& exps, unsigned modulus) {
  return TwistTuple(exps, modulus);
}

WitnessSearch make_search(std::uint64_t seed, unsigned trials, long coeff_bound) {
  WitnessSearch s;
  s.seed = seed;
  s.trials = trials;
  s.coeff_bound = coeff_bound;
  return s;
}

FamilySpec make_family_spec(const std::string& name,
                            const std::map<std::string, py::object>& params,
                            unsigned order,
                            const std::optional<std::string>& expected) {
  auto id = family_from_name(name);
  if (!id) throw std::invalid_argument("unknown family id '" + name + "'");
  FamilySpec spec;
  spec.id = *id;
  spec.order = order;
  spec.expected = expected;
  for (const auto& [key, value] : params)
    spec.params.emplace(key, cyc_from_object(order, value));
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact centralizer strata and component groups for finitely generated "
      "matrix subgroups of PGL_n over cyclotomic fields";

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init([](unsigned order, const py::object& value) {
             return cyc_from_object(order, value);
           }),
           py::arg("order"), py::arg("value") = py::int_(0))
      .def_static("zeta", &Cyclotomic::zeta, py::arg("order"))
      .def_property_readonly("order", &Cyclotomic::order)
      .def("is_zero", &Cyclotomic::is_zero)
      .def("is_rational", &Cyclotomic::is_rational)
      .def("inverse", &Cyclotomic::inverse)
      .def("pow", &Cyclotomic::pow, py::arg("e"))
      .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
      .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
      .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
      .def("__truediv__", [](const Cyclotomic& a, const Cyclotomic& b) { return a / b; })
      .def("__neg__", [](const Cyclotomic& a) { return -a; })
      .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
      .def("__str__", &Cyclotomic::to_string)
      .def("__repr__", [](const Cyclotomic& a) {
        return "Cyclotomic(" + std::to_string(a.order()) + ", \"" +
               a.to_string() + "\")";
      });

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows), py::arg("order"), py::arg("rows"))
      .def_static("identity", &Matrix::identity, py::arg("n"), py::arg("order"))
      .def_static("parse", &parse_matrix_literal, py::arg("text"), py::arg("order"))
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def_property_readonly("order", &Matrix::order)
      .def("at", &Matrix::at, py::arg("i"), py::arg("j"))
      .def("det", [](const Matrix& a) { return det(a); })
      .def("rank", [](const Matrix& a) { return rank(a); })
      .def("inverse", [](const Matrix& a) { return inverse(a); })
      .def("scaled", &Matrix::scaled, py::arg("c"))
      .def("entries",
           [](const Matrix& a) {
             std::vector<std::vector<std::string>> out;
             for (unsigned i = 0; i < a.rows(); ++i) {
               std::vector<std::string> row;
               for (unsigned j = 0; j < a.cols(); ++j)
                 row.push_back(a.at(i, j).to_string());
               out.push_back(std::move(row));
             }
             return out;
           })
      .def("__mul__", [](const Matrix& a, const Matrix& b) { return a * b; })
      .def("__add__", [](const Matrix& a, const Matrix& b) { return a + b; })
      .def("__sub__", [](const Matrix& a, const Matrix& b) { return a - b; })
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__str__", &Matrix::to_string)
      .def("__repr__", [](const Matrix& a) {
        return "Matrix(" + std::to_string(a.order()) + ", " + a.to_string() + ")";
      });

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def(py::init<std::vector<Matrix>, unsigned>(), py::arg("generators"),
           py::arg("twist_order") = 0)
      .def_property_readonly("n", &GeneratorSet::n)
      .def_property_readonly("m", &GeneratorSet::m)
      .def_property_readonly("field_order", &GeneratorSet::field_order)
      .def_property_readonly("count", &GeneratorSet::count)
      .def_property_readonly("generators", &GeneratorSet::generators)
      .def("twist_root", &GeneratorSet::twist_root, py::arg("exponent"));

  py::class_<Stratum>(m, "Stratum")
      .def_property_readonly(
          "twist", [](const Stratum& s) { return s.twist.exponents(); })
      .def_property_readonly(
          "dim", [](const Stratum& s) { return s.space.dimension(); })
      .def_property_readonly(
          "basis", [](const Stratum& s) { return s.space.basis(); })
      .def_property_readonly("witness",
                             [](const Stratum& s) { return s.witness; })
      .def_property_readonly(
          "status", [](const Stratum& s) { return to_string(s.status); });

  py::class_<ComponentGroupReport>(m, "ComponentGroupReport")
      .def_property_readonly("n", [](const ComponentGroupReport& r) { return r.n; })
      .def_property_readonly("m", [](const ComponentGroupReport& r) { return r.m; })
      .def_property_readonly(
          "centralizer_dim",
          [](const ComponentGroupReport& r) { return r.centralizer_dim; })
      .def_property_readonly(
          "strata", [](const ComponentGroupReport& r) { return r.strata; })
      .def_property_readonly("nonempty_twists",
                             [](const ComponentGroupReport& r) {
                               std::vector<std::vector<unsigned>> out;
                               for (const TwistTuple& t : r.nonempty_twists)
                                 out.push_back(t.exponents());
                               return out;
                             })
      .def_property_readonly("subgroup_generators",
                             [](const ComponentGroupReport& r) {
                               std::vector<std::vector<unsigned>> out;
                               for (const TwistTuple& t : r.subgroup_generators)
                                 out.push_back(t.exponents());
                               return out;
                             })
      .def_property_readonly(
          "invariant_factors",
          [](const ComponentGroupReport& r) { return r.invariant_factors; })
      .def_property_readonly(
          "iso_label", [](const ComponentGroupReport& r) { return r.iso_label; })
      .def(
          "to_json",
          [](const ComponentGroupReport& r, const std::string& case_label) {
            return emit_report(case_label, r, ReportFormat::Json);
          },
          py::arg("case_label") = "custom")
      .def(
          "to_text",
          [](const ComponentGroupReport& r, const std::string& case_label) {
            return emit_report(case_label, r, ReportFormat::Text);
          },
          py::arg("case_label") = "custom");

  m.def(
      "solve_stratum",
      [](const GeneratorSet& gens, const std::vector<unsigned>& twist,
         std::uint64_t seed, unsigned trials, long coeff_bound) {
        return solve_stratum(gens, twist_from_list(twist, gens.m()),
                             make_search(seed, trials, coeff_bound));
      },
      py::arg("generators"), py::arg("twist"), py::arg("seed") = 0,
      py::arg("trials") = 32, py::arg("coeff_bound") = 10);

  m.def(
      "centralizer",
      [](const GeneratorSet& gens, std::uint64_t seed, unsigned trials,
         long coeff_bound) {
        return centralizer(gens, make_search(seed, trials, coeff_bound));
      },
      py::arg("generators"), py::arg("seed") = 0, py::arg("trials") = 32,
      py::arg("coeff_bound") = 10);

  m.def(
      "component_group",
      [](const GeneratorSet& gens, std::uint64_t seed, unsigned trials,
         long coeff_bound) {
        return component_group(gens, make_search(seed, trials, coeff_bound));
      },
      py::arg("generators"), py::arg("seed") = 0, py::arg("trials") = 32,
      py::arg("coeff_bound") = 10);

  m.def(
      "build_family",
      [](const std::string& name, const std::map<std::string, py::object>& params,
         unsigned order, const std::optional<std::string>& expected) {
        return build_family(make_family_spec(name, params, order, expected));
      },
      py::arg("family"), py::arg("params") = std::map<std::string, py::object>{},
      py::arg("order") = 3, py::arg("expected") = std::nullopt);

  m.def("stabilize", &stabilize, py::arg("generators"), py::arg("extra"));

  m.def("classify_label", &classify_label, py::arg("invariant_factors"));

  m.def(
      "problem_to_generators",
      [](const std::string& text) {
        return problem_generator_set(parse_problem(text));
      },
      py::arg("text"));

  m.def(
      "paper_suite",
      [](const std::string& format, std::uint64_t seed, unsigned trials,
         long coeff_bound) {
        const PaperSuiteResult result =
            run_paper_suite(make_search(seed, trials, coeff_bound));
        return emit_paper_suite(result, format == "json" ? ReportFormat::Json
                                                         : ReportFormat::Text);
      },
      py::arg("format") = "json", py::arg("seed") = 0, py::arg("trials") = 32,
      py::arg("coeff_bound") = 10);

  m.attr("__version__") = "0.1.0";
}
