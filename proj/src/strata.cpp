#include "twistcent/strata.hpp"

#include <map>
#include <numeric>
#include <random>
#include <utility>

namespace twistcent {

TwistTuple::TwistTuple(std::vector<unsigned> exponents, unsigned modulus)
    : exponents_(std::move(exponents)), modulus_(modulus) {
  if (modulus_ == 0)
    throw std::invalid_argument("TwistTuple: modulus must be positive");
  if (exponents_.empty())
    throw std::invalid_argument("TwistTuple: empty exponent vector");
  for (unsigned e : exponents_)
    if (e >= modulus_)
      throw std::invalid_argument("TwistTuple: exponent out of [0, m)");
}

TwistTuple TwistTuple::zero(unsigned k, unsigned modulus) {
  return TwistTuple(std::vector<unsigned>(k, 0u), modulus);
}

TwistTuple TwistTuple::operator+(const TwistTuple& o) const {
  if (modulus_ != o.modulus_ || size() != o.size())
    throw std::invalid_argument("TwistTuple: incompatible tuples");
  std::vector<unsigned> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (exponents_[i] + o.exponents_[i]) % modulus_;
  return TwistTuple(std::move(out), modulus_);
}

TwistTuple TwistTuple::operator-() const {
  std::vector<unsigned> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (modulus_ - exponents_[i]) % modulus_;
  return TwistTuple(std::move(out), modulus_);
}

bool TwistTuple::is_zero() const {
  for (unsigned e : exponents_)
    if (e != 0) return false;
  return true;
}

unsigned TwistTuple::element_order() const {
  unsigned ord = 1;
  for (unsigned e : exponents_) {
    const unsigned comp = modulus_ / std::gcd(e, modulus_);
    ord = std::lcm(ord, comp);
  }
  return ord;
}

bool TwistTuple::operator==(const TwistTuple& o) const {
  return modulus_ == o.modulus_ && exponents_ == o.exponents_;
}

bool TwistTuple::operator<(const TwistTuple& o) const {
  return exponents_ < o.exponents_;
}

std::string TwistTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out + ")";
}

GeneratorSet::GeneratorSet(std::vector<Matrix> gens, unsigned twist_order) {
  if (gens.empty())
    throw std::invalid_argument("GeneratorSet: need at least one generator");
  if (!gens[0].is_square())
    throw std::invalid_argument("GeneratorSet: generators must be square");
  n_ = gens[0].rows();
  field_order_ = gens[0].order();
  m_ = twist_order == 0 ? n_ : twist_order;
  if (field_order_ % m_ != 0)
    throw std::invalid_argument(
        "GeneratorSet: Q(zeta_" + std::to_string(field_order_) +
        ") has no primitive " + std::to_string(m_) +
        "-th root of unity; the twist order must divide the field order");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix& g = gens[i];
    if (!g.is_square() || g.rows() != n_ || g.order() != field_order_)
      throw std::invalid_argument("GeneratorSet: inconsistent generator shapes");
    if (det(g).is_zero())
      throw std::invalid_argument("GeneratorSet: singular generator at index " +
                                  std::to_string(i));
  }
  gens_ = std::move(gens);
}

Cyclotomic GeneratorSet::twist_root(unsigned exponent) const {
  return Cyclotomic::zeta(field_order_)
      .pow(static_cast<long>(field_order_ / m_) * (exponent % m_));
}

GeneratorSet GeneratorSet::appended(Matrix extra) const {
  std::vector<Matrix> all = gens_;
  all.push_back(std::move(extra));
  return GeneratorSet(std::move(all), m_);
}

std::string to_string(StratumStatus s) {
  switch (s) {
    case StratumStatus::EmptySpace: return "empty-space";
    case StratumStatus::NoInvertible: return "no-invertible";
    case StratumStatus::NonemptyWithWitness: return "nonempty-with-witness";
  }
  return "unknown";
}

Matrix build_twisted_system(const Matrix& a, const Cyclotomic& xi,
                            unsigned twist_order) {
  if (!a.is_square())
    throw std::invalid_argument("build_twisted_system: matrix is not square");
  if (xi.order() != a.order())
    throw std::invalid_argument("build_twisted_system: mixed cyclotomic orders");
  if (!xi.pow(twist_order).is_one())
    throw std::invalid_argument(
        "build_twisted_system: twist is not an m-th root of unity (m = " +
        std::to_string(twist_order) + ")");
  const unsigned n = a.rows();
  Matrix out(n * n, n * n, a.order());
  // Row (i,j) states (X*A - xi*A*X)_{ij} = 0: the X_{iq} coefficient is
  // A_{qj}, the X_{pj} coefficient is -xi*A_{ip}.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const unsigned row = i * n + j;
      for (unsigned q = 0; q < n; ++q) {
        const unsigned col = i * n + q;
        out.set(row, col, out.at(row, col) + a.at(q, j));
      }
      for (unsigned p = 0; p < n; ++p) {
        const unsigned col = p * n + j;
        out.set(row, col, out.at(row, col) - xi * a.at(i, p));
      }
    }
  return out;
}

namespace {

Matrix stacked_system(const GeneratorSet& gens, const TwistTuple& twist) {
  if (twist.size() != gens.count() || twist.modulus() != gens.m())
    throw std::invalid_argument("solve_stratum: twist tuple does not match the generator set");
  const unsigned n = gens.n();
  Matrix stacked(gens.count() * n * n, n * n, gens.field_order());
  for (unsigned g = 0; g < gens.count(); ++g) {
    const Matrix block = build_twisted_system(
        gens.generators()[g], gens.twist_root(twist.exponent(g)), gens.m());
    for (unsigned i = 0; i < n * n; ++i)
      for (unsigned j = 0; j < n * n; ++j)
        stacked.set(g * n * n + i, j, block.at(i, j));
  }
  return stacked;
}

Matrix normalize_witness(const Matrix& w) {
  for (unsigned i = 0; i < w.rows(); ++i)
    for (unsigned j = 0; j < w.cols(); ++j)
      if (!w.at(i, j).is_zero()) return w.scaled(w.at(i, j).inverse());
  return w;
}

// Sparse multivariate polynomial over Q(zeta_f): exponent vector -> coeff.
struct MultiPoly {
  std::map<std::vector<unsigned>, Cyclotomic> terms;

  static MultiPoly zero() { return {}; }

  void add_term(std::vector<unsigned> exps, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
      terms.emplace(std::move(exps), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms) out.add_term(e, c);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<unsigned> e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        out.add_term(std::move(e), c1 * c2);
      }
    return out;
  }

  bool is_zero() const { return terms.empty(); }

  Cyclotomic eval(const std::vector<long>& point, unsigned order) const {
    Cyclotomic acc(order);
    for (const auto& [e, c] : terms) {
      Rational prod(1);
      for (std::size_t i = 0; i < e.size(); ++i) {
        mpz_class p;
        mpz_class base(point[i]);
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e[i]);
        prod *= Rational(p);
      }
      acc += c * Cyclotomic(order, prod);
    }
    return acc;
  }
};

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m,
                   const std::vector<unsigned>& rows,
                   const std::vector<unsigned>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  MultiPoly acc;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const MultiPoly& e = m[rows[0]][cols[j]];
    if (e.is_zero()) continue;
    std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
    std::vector<unsigned> sub_cols;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    MultiPoly minor = det_poly(m, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + e * minor : acc + (-(e * minor));
  }
  return acc;
}

std::optional<Matrix> combo_if_invertible(const MatrixSpan& span,
                                          const std::vector<Rational>& coeffs) {
  const unsigned order = span.order();
  Matrix sum(span.n(), span.n(), order);
  for (unsigned j = 0; j < span.dimension(); ++j) {
    if (coeffs[j] == 0) continue;
    sum = sum + span.basis()[j].scaled(Cyclotomic(order, coeffs[j]));
  }
  if (det(sum).is_zero()) return std::nullopt;
  return normalize_witness(sum);
}

}  // namespace

std::optional<Matrix> find_invertible(const MatrixSpan& span,
                                      const WitnessSearch& search) {
  const unsigned d = span.dimension();
  if (d == 0) return std::nullopt;
  const unsigned n = span.n();

  // 1. Basis elements.
  for (unsigned j = 0; j < d; ++j)
    if (!det(span.basis()[j]).is_zero())
      return normalize_witness(span.basis()[j]);

  // 2. Deterministic integer combinations: all-ones, then geometric t^j.
  {
    std::vector<Rational> ones(d, Rational(1));
    if (auto w = combo_if_invertible(span, ones)) return w;
    for (long t : {2L, 3L}) {
      std::vector<Rational> coeffs(d);
      mpz_class p(1);
      for (unsigned j = 0; j < d; ++j) {
        coeffs[j] = Rational(p);
        p *= t;
      }
      if (auto w = combo_if_invertible(span, coeffs)) return w;
    }
  }

  // 3. Seeded random integer combinations.
  {
    std::mt19937_64 rng(search.seed);
    const long bound = search.coeff_bound > 0 ? search.coeff_bound : 1;
    const std::uint64_t width = static_cast<std::uint64_t>(2 * bound + 1);
    for (unsigned t = 0; t < search.trials; ++t) {
      std::vector<Rational> coeffs(d);
      for (unsigned j = 0; j < d; ++j)
        coeffs[j] = Rational(static_cast<long>(rng() % width) - bound);
      if (auto w = combo_if_invertible(span, coeffs)) return w;
    }
  }

  // 4. Exact decision: expand det(sum_j t_j B_j) symbolically.
  std::vector<std::vector<MultiPoly>> entry(
      n, std::vector<MultiPoly>(n, MultiPoly::zero()));
  for (unsigned j = 0; j < d; ++j)
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) {
        std::vector<unsigned> e(d, 0);
        e[j] = 1;
        entry[r][c].add_term(std::move(e), span.basis()[j].at(r, c));
      }
  std::vector<unsigned> idx(n);
  for (unsigned i = 0; i < n; ++i) idx[i] = i;
  const MultiPoly dp = det_poly(entry, idx, idx);
  if (dp.is_zero()) return std::nullopt;

  // The polynomial has degree <= n in each t_j, so it cannot vanish on the
  // whole grid {0..n}^d.
  std::vector<long> point(d, 0);
  while (true) {
    if (!dp.eval(point, span.order()).is_zero()) {
      std::vector<Rational> coeffs(d);
      for (unsigned j = 0; j < d; ++j) coeffs[j] = Rational(point[j]);
      auto w = combo_if_invertible(span, coeffs);
      if (!w)
        throw std::logic_error("find_invertible: evaluation disagrees with expansion");
      return w;
    }
    unsigned j = 0;
    while (j < d && point[j] == static_cast<long>(n)) point[j++] = 0;
    if (j == d)
      throw std::logic_error("find_invertible: nonzero polynomial vanished on the full grid");
    ++point[j];
  }
}

Stratum solve_stratum(const GeneratorSet& gens, const TwistTuple& twist,
                      const WitnessSearch& search) {
  const unsigned n = gens.n();
  const Matrix system = stacked_system(gens, twist);
  const auto vecs = kernel_basis(system);
  if (vecs.empty())
    return Stratum{twist, MatrixSpan(n, gens.field_order()), std::nullopt,
                   StratumStatus::EmptySpace};
  std::vector<Matrix> basis;
  basis.reserve(vecs.size());
  for (const auto& v : vecs)
    basis.push_back(Matrix::from_vector(v, n, gens.field_order()));
  MatrixSpan space(std::move(basis));
  auto witness = find_invertible(space, search);
  const StratumStatus status = witness ? StratumStatus::NonemptyWithWitness
                                       : StratumStatus::NoInvertible;
  return Stratum{twist, std::move(space), std::move(witness), status};
}

Stratum centralizer(const GeneratorSet& gens, const WitnessSearch& search) {
  return solve_stratum(gens, TwistTuple::zero(gens.count(), gens.m()), search);
}

unsigned stratum_dimension(const GeneratorSet& gens, const TwistTuple& twist) {
  const Matrix system = stacked_system(gens, twist);
  return gens.n() * gens.n() - rank(system);
}

}  // namespace twistcent
