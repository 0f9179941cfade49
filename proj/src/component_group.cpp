#include "twistcent/component_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace twistcent {

const Stratum& ComponentGroupReport::stratum(const TwistTuple& twist) const {
  for (const Stratum& s : strata)
    if (s.twist == twist) return s;
  throw std::invalid_argument("ComponentGroupReport: no stratum for twist " +
                              twist.to_string());
}

std::string classify_label(const std::vector<unsigned>& invariant_factors) {
  if (invariant_factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(invariant_factors[i]) + "Z";
  }
  return out;
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> mat) {
  const std::size_t rows = mat.size();
  const std::size_t cols = rows ? mat[0].size() : 0;
  const std::size_t nmin = std::min(rows, cols);
  std::vector<long long> diag;

  auto is_clear = [&](std::size_t s) {
    for (std::size_t i = s + 1; i < rows; ++i)
      if (mat[i][s] != 0) return false;
    for (std::size_t j = s + 1; j < cols; ++j)
      if (mat[s][j] != 0) return false;
    return true;
  };

  for (std::size_t s = 0; s < nmin; ++s) {
    while (true) {
      // Smallest nonzero |entry| in the lower-right block to (s,s).
      std::size_t pr = s, pc = s;
      long long best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          const long long v = std::llabs(mat[i][j]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) break;  // block is all zero
      std::swap(mat[s], mat[pr]);
      if (pc != s)
        for (std::size_t i = 0; i < rows; ++i) std::swap(mat[i][s], mat[i][pc]);
      for (std::size_t i = s + 1; i < rows; ++i) {
        const long long q = mat[i][s] / mat[s][s];
        if (q)
          for (std::size_t j = s; j < cols; ++j) mat[i][j] -= q * mat[s][j];
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        const long long q = mat[s][j] / mat[s][s];
        if (q)
          for (std::size_t i = s; i < rows; ++i) mat[i][j] -= q * mat[i][s];
      }
      if (!is_clear(s)) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and reduce again.
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (mat[i][j] % mat[s][s] != 0) {
            for (std::size_t t = 0; t < cols; ++t) mat[s][t] += mat[i][t];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(mat[s][s]));
  }
  return diag;
}

namespace {

std::vector<TwistTuple> all_tuples(unsigned k, unsigned m) {
  std::vector<TwistTuple> out;
  std::vector<unsigned> cur(k, 0);
  while (true) {
    out.emplace_back(cur, m);
    unsigned i = k;
    while (i > 0 && cur[i - 1] == m - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal generating tuples, greedy over highest element order first.
std::vector<TwistTuple> generating_tuples(const std::vector<TwistTuple>& group,
                                          unsigned k, unsigned m) {
  std::vector<TwistTuple> candidates = group;
  std::sort(candidates.begin(), candidates.end(),
            [](const TwistTuple& a, const TwistTuple& b) {
              const unsigned oa = a.element_order(), ob = b.element_order();
              return oa != ob ? oa > ob : a < b;
            });
  std::set<std::vector<unsigned>> closure;
  closure.insert(TwistTuple::zero(k, m).exponents());
  std::vector<TwistTuple> gens;
  for (const TwistTuple& c : candidates) {
    if (closure.count(c.exponents())) continue;
    gens.push_back(c);
    // Close under addition of the new generator.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<unsigned>> snapshot(closure.begin(), closure.end());
      for (const auto& a : snapshot) {
        const TwistTuple sum = TwistTuple(a, m) + c;
        if (closure.insert(sum.exponents()).second) grew = true;
      }
    }
    if (closure.size() == group.size()) break;
  }
  return gens;
}

}  // namespace

ComponentGroupReport component_group(const GeneratorSet& gens,
                                     const WitnessSearch& search) {
  const unsigned k = gens.count();
  const unsigned m = gens.m();

  ComponentGroupReport report;
  report.n = gens.n();
  report.m = m;
  report.field_order = gens.field_order();

  for (const TwistTuple& t : all_tuples(k, m))
    report.strata.push_back(solve_stratum(gens, t, search));

  const Stratum& zero = report.stratum(TwistTuple::zero(k, m));
  report.centralizer_dim = zero.space.dimension();
  if (zero.status != StratumStatus::NonemptyWithWitness)
    throw ClosureError("zero twist stratum has no witness; the identity must centralize");

  for (const Stratum& s : report.strata)
    if (s.status == StratumStatus::NonemptyWithWitness)
      report.nonempty_twists.push_back(s.twist);

  // Verified, not assumed: the nonempty tuples form a subgroup of (Z/mZ)^k.
  std::set<std::vector<unsigned>> nonempty;
  for (const TwistTuple& t : report.nonempty_twists)
    nonempty.insert(t.exponents());
  for (const TwistTuple& a : report.nonempty_twists) {
    if (!nonempty.count((-a).exponents()))
      throw ClosureError("nonempty twists not closed under inversion at " +
                         a.to_string());
    for (const TwistTuple& b : report.nonempty_twists)
      if (!nonempty.count((a + b).exponents()))
        throw ClosureError("nonempty twists not closed under addition at " +
                           a.to_string() + " + " + b.to_string());
  }

  // H = L / mZ^k for the lattice L spanned by the lifted nonempty tuples
  // together with mZ^k. Diagonalizing that lattice maps L to (+) d_i Z in
  // coordinates that fix mZ^k, so H = (+) Z/(m/d_i).
  std::vector<std::vector<long long>> rows;
  for (const TwistTuple& t : report.nonempty_twists) {
    std::vector<long long> row(k);
    for (unsigned i = 0; i < k; ++i) row[i] = t.exponent(i);
    rows.push_back(std::move(row));
  }
  for (unsigned i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = m;
    rows.push_back(std::move(row));
  }
  const std::vector<long long> diag = smith_diagonal(std::move(rows));
  unsigned long long order_product = 1;
  for (auto it = diag.rbegin(); it != diag.rend(); ++it) {
    if (*it == 0 || m % *it != 0)
      throw ClosureError("invariant factor computation degenerated");
    const unsigned factor = m / static_cast<unsigned>(*it);
    order_product *= factor;
    if (factor > 1) report.invariant_factors.push_back(factor);
  }
  if (order_product != report.nonempty_twists.size())
    throw ClosureError("group order disagrees with the invariant factors");

  report.subgroup_generators = generating_tuples(report.nonempty_twists, k, m);
  report.iso_label = classify_label(report.invariant_factors);
  return report;
}

}  // namespace twistcent
