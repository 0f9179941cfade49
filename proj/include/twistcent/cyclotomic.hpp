#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistcent {

// Exact rational scalar. GMP keeps numerator/denominator in lowest terms
// with a positive denominator, which is the canonical form we rely on.
using Rational = mpq_class;

// Thrown by the entry-expression parser; offset is 0-based into the input.
struct ExprParseError : std::runtime_error {
  std::size_t offset;
  ExprParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
};

unsigned euler_phi(unsigned m);

// Monic m-th cyclotomic polynomial Phi_m, coefficients in ascending degree
// (length phi(m)+1). Cached across calls; thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(unsigned m);

// An element of Q(zeta_m), stored as the canonical representative in
// Q[z]/Phi_m(z): exactly phi(m) rational coefficients, ascending degree.
// Two values are equal iff their orders and coefficient vectors are equal.
// Mixing orders in arithmetic is an error, never a coercion.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned order);  // zero of Q(zeta_order)
  Cyclotomic(unsigned order, const Rational& value);
  Cyclotomic(unsigned order, long value);

  // The class of z, a primitive order-th root of unity.
  static Cyclotomic zeta(unsigned order);
  // Reduces an arbitrary polynomial in z (ascending degree) mod Phi_order.
  static Cyclotomic from_poly(unsigned order, std::vector<Rational> poly);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  // Multiplicative inverse via extended gcd with Phi_m.
  // Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Canonical textual form in the entry grammar, e.g. "-1-z", "2+3*z^2".
  // Round-trips through parse_cyclotomic.
  std::string to_string() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;  // length euler_phi(order_)
  void check_same_order(const Cyclotomic& o) const;
};

// Parses the entry grammar: rationals as `p` or `p/q`, the primitive root
// as `z`, operators + - * ^ and parentheses. Whitespace is insignificant.
Cyclotomic parse_cyclotomic(std::string_view text, unsigned order);

}  // namespace twistcent
