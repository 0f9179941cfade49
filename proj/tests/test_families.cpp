#include "twistcent/families.hpp"

#include "doctest.h"
#include "test_util.hpp"
#include "twistcent/component_group.hpp"
#include "twistcent/problem.hpp"

using namespace twistcent;

namespace {

Matrix mat(unsigned order, const std::string& literal) {
  return parse_matrix_literal(literal, order);
}

FamilySpec spec_of(FamilyId id, std::map<std::string, Cyclotomic> params = {}) {
  FamilySpec s;
  s.id = id;
  s.params = std::move(params);
  return s;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (FamilyId id : {FamilyId::PrincipalSeries, FamilyId::Steinberg3,
                      FamilyId::DihedralChi, FamilyId::TetrahedralChi,
                      FamilyId::OctahedralChi, FamilyId::Steinberg2Chi})
    CHECK(family_from_name(family_name(id)) == id);
  CHECK_FALSE(family_from_name("nonsense").has_value());
}

TEST_CASE("built-in generator matrices") {
  const GeneratorSet ps = build_family(spec_of(
      FamilyId::PrincipalSeries,
      {{"a1", Cyclotomic(3, 2L)}, {"a2", Cyclotomic(3, 3L)}}));
  CHECK(ps.count() == 1);
  CHECK(ps.generators()[0] == mat(3, "[[2,0,0],[0,3,0],[0,0,1]]"));

  const GeneratorSet st3 = build_family(spec_of(FamilyId::Steinberg3));
  CHECK(st3.generators()[0] == mat(3, "[[4,0,0],[0,1,0],[0,0,1/4]]"));
  CHECK(st3.generators()[1] == mat(3, "[[1,1,1],[2,3,4],[1,2,4]]"));

  const GeneratorSet dih = build_family(spec_of(FamilyId::DihedralChi));
  CHECK(dih.generators()[0] == mat(3, "[[0,1,0],[1,0,0],[0,0,5]]"));
  CHECK(dih.generators()[1] == mat(3, "[[-1,0,0],[0,1,0],[0,0,5]]"));

  const GeneratorSet tet = build_family(spec_of(FamilyId::TetrahedralChi));
  CHECK(tet.generators()[0] == mat(3, "[[0,1,0],[2,0,0],[0,0,5]]"));
  CHECK(tet.generators()[1] == mat(3, "[[1,1,0],[0,1,0],[0,0,5]]"));

  const GeneratorSet st2 = build_family(spec_of(FamilyId::Steinberg2Chi));
  CHECK(st2.count() == 3);
  CHECK(st2.generators()[0] == mat(3, "[[2,0,0],[0,1/2,0],[0,0,1]]"));
  CHECK(st2.generators()[1] == mat(3, "[[1,1,0],[0,1,0],[0,0,1]]"));
  CHECK(st2.generators()[2] == mat(3, "[[1,0,0],[1,1,0],[0,0,1]]"));
}

TEST_CASE("family invariant violations name the condition") {
  CHECK_THROWS_WITH_AS(
      build_family(spec_of(FamilyId::PrincipalSeries,
                           {{"a1", Cyclotomic(3, 1L)}, {"a2", Cyclotomic(3, 3L)}})),
      doctest::Contains("pairwise distinct"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      build_family(spec_of(FamilyId::PrincipalSeries,
                           {{"a1", Cyclotomic(3, 0L)}, {"a2", Cyclotomic(3, 3L)}})),
      doctest::Contains("nonzero"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_family(spec_of(FamilyId::PrincipalSeries)),
                       doctest::Contains("missing param"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      build_family(spec_of(FamilyId::DihedralChi, {{"c", Cyclotomic(3, 1L)}})),
      doctest::Contains("c != 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      build_family(spec_of(FamilyId::TetrahedralChi, {{"c", Cyclotomic(3, 4L)}})),
      doctest::Contains("c = a^2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      build_family(spec_of(FamilyId::Steinberg2Chi, {{"k", Cyclotomic(3, 1L)}})),
      doctest::Contains("k != 0 and k != 1"), std::invalid_argument);
}

TEST_CASE("families reproduce the classification") {
  const Cyclotomic z = Cyclotomic::zeta(3);
  CHECK(component_group(build_family(spec_of(
            FamilyId::PrincipalSeries, {{"a1", z}, {"a2", z * z}})))
            .iso_label == "Z/3Z");
  CHECK(component_group(build_family(spec_of(
            FamilyId::PrincipalSeries,
            {{"a1", Cyclotomic(3, 2L)}, {"a2", Cyclotomic(3, 3L)}})))
            .iso_label == "trivial");
  CHECK(component_group(build_family(spec_of(FamilyId::Steinberg3))).iso_label ==
        "trivial");
  const ComponentGroupReport dih =
      component_group(build_family(spec_of(FamilyId::DihedralChi)));
  CHECK(dih.iso_label == "trivial");
  CHECK(dih.centralizer_dim == 2);
  const ComponentGroupReport st2 =
      component_group(build_family(spec_of(FamilyId::Steinberg2Chi,
                                           {{"k", Cyclotomic(3, 5L)}})));
  CHECK(st2.iso_label == "trivial");
  CHECK(st2.centralizer_dim == 2);
}

TEST_CASE("families build over any field containing the cube roots") {
  FamilySpec s = spec_of(FamilyId::Steinberg3);
  s.order = 6;
  const GeneratorSet gens = build_family(s);
  CHECK(gens.field_order() == 6);
  CHECK(gens.m() == 3);
  // zeta_6^2 is the primitive cube root inside Q(zeta_6).
  CHECK(gens.twist_root(1) == Cyclotomic::zeta(6).pow(2));
  const ComponentGroupReport rep = component_group(gens);
  CHECK(rep.iso_label == "trivial");
  CHECK(rep.centralizer_dim == 1);

  FamilySpec bad = spec_of(FamilyId::Steinberg3);
  bad.order = 4;
  CHECK_THROWS_WITH_AS(build_family(bad), doctest::Contains("divisible by 3"),
                       std::invalid_argument);
}

TEST_CASE("octahedral and tetrahedral reports agree") {
  for (long c : {5L, 7L}) {
    const ComponentGroupReport tet = component_group(build_family(
        spec_of(FamilyId::TetrahedralChi, {{"c", Cyclotomic(3, c)}})));
    const ComponentGroupReport oct = component_group(build_family(
        spec_of(FamilyId::OctahedralChi, {{"c", Cyclotomic(3, c)}})));
    CHECK(tet.iso_label == oct.iso_label);
    CHECK(tet.centralizer_dim == oct.centralizer_dim);
    CHECK(tet.invariant_factors == oct.invariant_factors);
    REQUIRE(tet.strata.size() == oct.strata.size());
    for (std::size_t i = 0; i < tet.strata.size(); ++i)
      CHECK(tet.strata[i].space.dimension() == oct.strata[i].space.dimension());
  }
}

TEST_CASE("principal series depends only on the cube-root condition") {
  const Cyclotomic z = Cyclotomic::zeta(3);
  const std::vector<Cyclotomic> pool = {
      Cyclotomic(3, 2L), Cyclotomic(3, 3L),  Cyclotomic(3, 5L),
      z * Cyclotomic(3, 2L), Cyclotomic(3, Rational(1, 2)),
      z - Cyclotomic(3, 1L)};
  for (const Cyclotomic& a1 : pool)
    for (const Cyclotomic& a2 : pool) {
      if (a1 == a2) continue;
      // At least one of a1, a2 is not a cube root of unity here.
      REQUIRE((!a1.pow(3).is_one() || !a2.pow(3).is_one()));
      const ComponentGroupReport rep = component_group(
          build_family(spec_of(FamilyId::PrincipalSeries, {{"a1", a1}, {"a2", a2}})));
      CHECK(rep.iso_label == "trivial");
      CHECK(rep.nonempty_twists.size() == 1);
    }
}

TEST_CASE("stabilize leaves settled families unchanged") {
  // Symmetric square of the lower shear: already centralized by scalars only.
  const GeneratorSet st3 = build_family(spec_of(FamilyId::Steinberg3));
  const GeneratorSet st3_after =
      stabilize(st3, {mat(3, "[[1,0,0],[2,1,0],[1,1,1]]")});
  CHECK(st3_after.count() == st3.count());

  // The finite surrogate fixes one character value; probing with members
  // at other character values must leave every dimension in place.
  const GeneratorSet dih5 = build_family(spec_of(FamilyId::DihedralChi));
  const std::vector<Matrix> other_c = {mat(3, "[[0,1,0],[1,0,0],[0,0,7]]"),
                                       mat(3, "[[-1,0,0],[0,1,0],[0,0,11]]")};
  CHECK(stabilize(dih5, other_c).count() == dih5.count());

  const GeneratorSet dih = build_family(spec_of(FamilyId::DihedralChi));
  const Matrix product = dih.generators()[0] * dih.generators()[1];
  CHECK(stabilize(dih, {product}).count() == dih.count());

  const GeneratorSet ps = build_family(spec_of(
      FamilyId::PrincipalSeries,
      {{"a1", Cyclotomic(3, 2L)}, {"a2", Cyclotomic(3, 3L)}}));
  CHECK(stabilize(ps, {mat(3, "[[4,0,0],[0,9,0],[0,0,1]]")}).count() == 1);
}

TEST_CASE("stabilize keeps probes that genuinely cut the centralizer") {
  const GeneratorSet ps = build_family(spec_of(
      FamilyId::PrincipalSeries,
      {{"a1", Cyclotomic(3, 4L)}, {"a2", Cyclotomic(3, 9L)}}));
  // The swap exchanges the eigenvalues 4 and 9, so it does not commute
  // with the diagonal: the probe must be retained and the dims shrink.
  const Matrix probe = mat(3, "[[0,1,0],[1,0,0],[0,0,1]]");
  const GeneratorSet grown = stabilize(ps, {probe});
  CHECK(grown.count() == 2);
  CHECK(centralizer(grown).space.dimension() <
        centralizer(ps).space.dimension());
}
