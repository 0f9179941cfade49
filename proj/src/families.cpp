#include "twistcent/families.hpp"

#include <algorithm>
#include <utility>

namespace twistcent {

std::optional<FamilyId> family_from_name(std::string_view name) {
  if (name == "principal-series") return FamilyId::PrincipalSeries;
  if (name == "steinberg3") return FamilyId::Steinberg3;
  if (name == "dihedral-chi") return FamilyId::DihedralChi;
  if (name == "tetrahedral-chi") return FamilyId::TetrahedralChi;
  if (name == "octahedral-chi") return FamilyId::OctahedralChi;
  if (name == "steinberg2-chi") return FamilyId::Steinberg2Chi;
  return std::nullopt;
}

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::PrincipalSeries: return "principal-series";
    case FamilyId::Steinberg3: return "steinberg3";
    case FamilyId::DihedralChi: return "dihedral-chi";
    case FamilyId::TetrahedralChi: return "tetrahedral-chi";
    case FamilyId::OctahedralChi: return "octahedral-chi";
    case FamilyId::Steinberg2Chi: return "steinberg2-chi";
  }
  return "unknown";
}

std::string family_case_label(const FamilySpec& spec) {
  std::string out = family_name(spec.id);
  if (spec.params.empty()) return out;
  out += "(";
  bool first = true;
  for (const auto& [key, value] : spec.params) {
    if (!first) out += ",";
    first = false;
    out += key + "=" + value.to_string();
  }
  return out + ")";
}

namespace {

const Cyclotomic& require_param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw std::invalid_argument(family_name(spec.id) + ": missing param " + key);
  if (it->second.order() != spec.order)
    throw std::invalid_argument(family_name(spec.id) + ": param " + key +
                                " has cyclotomic order " +
                                std::to_string(it->second.order()) +
                                ", expected " + std::to_string(spec.order));
  return it->second;
}

Cyclotomic param_or(const FamilySpec& spec, const std::string& key, long dflt) {
  if (spec.params.count(key)) return require_param(spec, key);
  return Cyclotomic(spec.order, dflt);
}

Matrix mat3(unsigned order, std::initializer_list<Cyclotomic> entries) {
  Matrix out(3, 3, order);
  unsigned idx = 0;
  for (const Cyclotomic& e : entries) {
    out.set(idx / 3, idx % 3, e);
    ++idx;
  }
  return out;
}

GeneratorSet build_exceptional_pair(const FamilySpec& spec, long a) {
  const unsigned f = spec.order;
  const Cyclotomic c = param_or(spec, "c", 5);
  const Cyclotomic one(f, 1L), zero(f);
  if (c == one)
    throw std::invalid_argument(family_name(spec.id) +
                                ": requires c != 1 (c is a character value)");
  if (c == Cyclotomic(f, a * a))
    throw std::invalid_argument(family_name(spec.id) + ": requires c != " +
                                std::to_string(a * a) +
                                " (degenerate case c = a^2 with a = " +
                                std::to_string(a) + ")");
  const Matrix swap_block =
      mat3(f, {zero, one, zero, Cyclotomic(f, a), zero, zero, zero, zero, c});
  Matrix second(3, 3, f);
  if (spec.id == FamilyId::DihedralChi) {
    second = mat3(f, {Cyclotomic(f, -1L), zero, zero, zero, one, zero, zero,
                      zero, c});
  } else {
    second = mat3(f, {one, one, zero, zero, one, zero, zero, zero, c});
  }
  return GeneratorSet({swap_block, second}, 3);
}

}  // namespace

GeneratorSet build_family(const FamilySpec& spec) {
  if (spec.order % 3 != 0)
    throw std::invalid_argument(
        "build_family: the cyclotomic order must be divisible by 3 so the "
        "cube-root twists exist");
  const unsigned f = spec.order;
  const Cyclotomic one(f, 1L), zero(f);

  switch (spec.id) {
    case FamilyId::PrincipalSeries: {
      const Cyclotomic a1 = require_param(spec, "a1");
      const Cyclotomic a2 = require_param(spec, "a2");
      if (a1.is_zero() || a2.is_zero())
        throw std::invalid_argument(
            "principal-series: requires a1 and a2 nonzero");
      if (a1 == a2 || a1 == one || a2 == one)
        throw std::invalid_argument(
            "principal-series: requires a1, a2, 1 pairwise distinct");
      return GeneratorSet(
          {mat3(f, {a1, zero, zero, zero, a2, zero, zero, zero, one})}, 3);
    }
    case FamilyId::Steinberg3: {
      // Sym^2 of diag(2, 1/2) and of [[1,1],[1,2]].
      const Matrix diag = mat3(
          f, {Cyclotomic(f, 4L), zero, zero, zero, one, zero, zero, zero,
              Cyclotomic(f, Rational(1, 4))});
      const Matrix generic =
          mat3(f, {one, one, one, Cyclotomic(f, 2L), Cyclotomic(f, 3L),
                   Cyclotomic(f, 4L), one, Cyclotomic(f, 2L),
                   Cyclotomic(f, 4L)});
      return GeneratorSet({diag, generic}, 3);
    }
    case FamilyId::DihedralChi:
      return build_exceptional_pair(spec, 1);
    case FamilyId::TetrahedralChi:
    case FamilyId::OctahedralChi:
      return build_exceptional_pair(spec, 2);
    case FamilyId::Steinberg2Chi: {
      const Cyclotomic k = param_or(spec, "k", 5);
      if (k.is_zero() || k == one)
        throw std::invalid_argument(
            "steinberg2-chi: requires k != 0 and k != 1 (k is a character value)");
      // Representatives of the GL_2 block up to scalar; the det = 1/k
      // condition scales away, so k never enters the matrices.
      const Matrix diag = mat3(f, {Cyclotomic(f, 2L), zero, zero, zero,
                                   Cyclotomic(f, Rational(1, 2)), zero, zero,
                                   zero, one});
      const Matrix upper =
          mat3(f, {one, one, zero, zero, one, zero, zero, zero, one});
      const Matrix lower =
          mat3(f, {one, zero, zero, one, one, zero, zero, zero, one});
      return GeneratorSet({diag, upper, lower}, 3);
    }
  }
  throw std::invalid_argument("build_family: unknown family");
}

namespace {

// Sorted positive stratum dimensions over all m^k twist tuples. Comparable
// across generator counts: appending a member of the generated group leaves
// the multiset fixed.
std::vector<unsigned> dimension_signature(const GeneratorSet& gens) {
  std::vector<unsigned> dims;
  std::vector<unsigned> cur(gens.count(), 0);
  const unsigned m = gens.m();
  while (true) {
    const unsigned d = stratum_dimension(gens, TwistTuple(cur, m));
    if (d > 0) dims.push_back(d);
    unsigned i = gens.count();
    while (i > 0 && cur[i - 1] == m - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(dims.begin(), dims.end(), std::greater<unsigned>());
  return dims;
}

}  // namespace

GeneratorSet stabilize(const GeneratorSet& gens,
                       const std::vector<Matrix>& extra) {
  GeneratorSet current = gens;
  std::vector<unsigned> signature = dimension_signature(current);
  std::vector<bool> consumed(extra.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (consumed[i]) continue;
      GeneratorSet candidate = current.appended(extra[i]);
      std::vector<unsigned> candidate_sig = dimension_signature(candidate);
      if (candidate_sig != signature) {
        current = std::move(candidate);
        signature = std::move(candidate_sig);
        consumed[i] = true;
        changed = true;
      }
    }
  }
  return current;
}

}  // namespace twistcent
