#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcent/matrix.hpp"

namespace twistcent {

// Exponent tuple in (Z/mZ)^k: generator i is twisted by zeta_m^exponents[i].
class TwistTuple {
 public:
  TwistTuple(std::vector<unsigned> exponents, unsigned modulus);
  static TwistTuple zero(unsigned k, unsigned modulus);

  unsigned size() const { return static_cast<unsigned>(exponents_.size()); }
  unsigned modulus() const { return modulus_; }
  unsigned exponent(unsigned i) const { return exponents_.at(i); }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  TwistTuple operator+(const TwistTuple& o) const;  // componentwise mod m
  TwistTuple operator-() const;                     // componentwise negation
  bool is_zero() const;
  unsigned element_order() const;  // order in the group (Z/mZ)^k

  bool operator==(const TwistTuple& o) const;
  bool operator!=(const TwistTuple& o) const { return !(*this == o); }
  bool operator<(const TwistTuple& o) const;  // lexicographic

  std::string to_string() const;  // "(0,1,2)"

 private:
  std::vector<unsigned> exponents_;
  unsigned modulus_;
};

// Finitely many invertible n x n generators over Q(zeta_f), with the twist
// lattice (Z/mZ)^k attached. m defaults to n, which is the PGL_n criterion:
// commuting modulo scalars forces the twist to be an n-th root of unity.
// m stays an explicit field so other quotients can be modeled.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Matrix> gens, unsigned twist_order = 0);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned field_order() const { return field_order_; }
  unsigned count() const { return static_cast<unsigned>(gens_.size()); }
  const std::vector<Matrix>& generators() const { return gens_; }

  // zeta_m^exponent as an element of Q(zeta_field_order).
  Cyclotomic twist_root(unsigned exponent) const;

  GeneratorSet appended(Matrix extra) const;

 private:
  unsigned n_, m_, field_order_;
  std::vector<Matrix> gens_;
};

enum class StratumStatus { EmptySpace, NoInvertible, NonemptyWithWitness };
std::string to_string(StratumStatus s);

// Solution space of the twisted system for one twist tuple, together with
// an invertible witness when the space meets GL_n.
struct Stratum {
  TwistTuple twist;
  MatrixSpan space;
  std::optional<Matrix> witness;  // normalized: first nonzero entry is 1
  StratumStatus status;
};

struct WitnessSearch {
  unsigned trials = 32;   // random integer combinations
  long coeff_bound = 10;  // coefficients drawn from [-bound, bound]
  std::uint64_t seed = 0;
};

// The n^2 x n^2 matrix L with L*vec(X) = 0  <=>  X*A - xi*A*X = 0, under
// the row-major vec convention. xi must satisfy xi^twist_order = 1.
Matrix build_twisted_system(const Matrix& a, const Cyclotomic& xi,
                            unsigned twist_order);

// Stacks the k twisted systems and takes one kernel; populates the witness
// by find_invertible when the space is nonzero.
Stratum solve_stratum(const GeneratorSet& gens, const TwistTuple& twist,
                      const WitnessSearch& search = {});

// solve_stratum at the trivial twist.
Stratum centralizer(const GeneratorSet& gens, const WitnessSearch& search = {});

// Dimension of the solution space only; no witness search.
unsigned stratum_dimension(const GeneratorSet& gens, const TwistTuple& twist);

// Invertible element of the span, or nullopt when the span has none.
// Probes each basis element and deterministic integer combinations, then
// up to `trials` seeded random combinations, and finally decides exactly:
// det of a generic combination is expanded as a multivariate polynomial in
// the combination coefficients; if it is not identically zero a witness is
// extracted from a nonvanishing point of the grid {0..n}^dim, which must
// exist because the polynomial has degree at most n in each variable.
std::optional<Matrix> find_invertible(const MatrixSpan& span,
                                      const WitnessSearch& search = {});

}  // namespace twistcent
