#include "twistcent/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace twistcent {

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out = a;
  if (b.size() > out.size()) out.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

// a = q*b + r with deg r < deg b. b must be nonzero.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  poly_trim(a);
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  const Rational lead = b.back();
  while (poly_degree(a) >= poly_degree(b)) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  poly_trim(q);
  r = std::move(a);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  if (m == 0) throw std::invalid_argument("euler_phi: order must be positive");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned m) {
  if (m == 0)
    throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::map<unsigned, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_d for every divisor d of m, bottom up: Phi_d = (x^d - 1) / prod of
  // Phi_e over proper divisors e of d.
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    Poly num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      Poly q, r;
      poly_divmod(num, cache.at(e), q, r);
      if (!r.empty())
        throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = std::move(q);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
  if (order == 0)
    throw std::invalid_argument("Cyclotomic: order must be positive");
  coeffs_.assign(euler_phi(order), Rational(0));
}

Cyclotomic::Cyclotomic(unsigned order, const Rational& value)
    : Cyclotomic(order) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(unsigned order, long value)
    : Cyclotomic(order, Rational(value)) {}

Cyclotomic Cyclotomic::zeta(unsigned order) {
  std::vector<Rational> poly(2, Rational(0));
  poly[1] = 1;
  return from_poly(order, std::move(poly));
}

Cyclotomic Cyclotomic::from_poly(unsigned order, std::vector<Rational> poly) {
  Cyclotomic out(order);
  const Poly& phi = cyclotomic_polynomial(order);
  poly_trim(poly);
  if (poly.size() >= phi.size()) {
    Poly q, r;
    poly_divmod(std::move(poly), phi, q, r);
    poly = std::move(r);
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out.coeffs_[i] = poly[i];
    out.coeffs_[i].canonicalize();
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::domain_error("rational_value: value is not rational");
  return coeffs_[0];
}

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument(
        "mixed cyclotomic orders: " + std::to_string(order_) + " vs " +
        std::to_string(o.order_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic out = *this;
  out += o;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic out = *this;
  out -= o;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_order(o);
  return from_poly(order_, poly_mul(coeffs_, o.coeffs_));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  return *this * o.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_m)");
  // Extended Euclid against Phi_m, tracking the coefficient of *this.
  // Phi_m is irreducible over Q, so the gcd is a nonzero constant.
  Poly r0 = cyclotomic_polynomial(order_);
  Poly r1 = coeffs_;
  poly_trim(r1);
  Poly s0;                      // coefficient of *this in r0
  Poly s1 = {Rational(1)};      // coefficient of *this in r1
  while (poly_degree(r1) > 0) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty())
      throw std::logic_error("inverse: gcd with irreducible Phi_m degenerated");
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return from_poly(order_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(order_, 1L);
  Cyclotomic base = *this;
  unsigned long exp = static_cast<unsigned long>(e);
  while (exp > 0) {
    if (exp & 1) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  check_same_order(o);
  return coeffs_ == o.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational a = abs(c);
    std::string body;
    if (k == 0) {
      body = a.get_str();
    } else {
      if (a != 1) body = a.get_str() + "*";
      body += (k == 1) ? "z" : "z^" + std::to_string(k);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? "-" : "+") + body;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct ExprParser {
  std::string_view input;
  std::size_t pos = 0;
  unsigned order;

  void skip_ws() {
    while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= input.size();
  }
  char peek() {
    skip_ws();
    return pos < input.size() ? input[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ExprParseError(msg, at);
  }

  Rational parse_number() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
    if (pos == start) fail("expected a number", start);
    mpz_class num(std::string(input.substr(start, pos - start)), 10);
    if (peek() == '/') {
      ++pos;
      skip_ws();
      const std::size_t dstart = pos;
      while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator", dstart);
      mpz_class den(std::string(input.substr(dstart, pos - dstart)), 10);
      if (den == 0) fail("zero denominator", dstart);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  unsigned long parse_exponent() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
    if (pos == start) fail("expected an exponent", start);
    try {
      return std::stoul(std::string(input.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      fail("exponent out of range", start);
    }
  }

  Cyclotomic parse_atom() {
    skip_ws();
    if (pos >= input.size()) fail("unexpected end of expression", pos);
    const char c = input[pos];
    if (c == 'z') {
      ++pos;
      return Cyclotomic::zeta(order);
    }
    if (c == '(') {
      ++pos;
      Cyclotomic v = parse_expr();
      if (peek() != ')') fail("expected ')'", pos);
      ++pos;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Cyclotomic(order, parse_number());
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  Cyclotomic parse_factor() {
    if (peek() == '-') {
      ++pos;
      return -parse_factor();
    }
    Cyclotomic v = parse_atom();
    if (peek() == '^') {
      ++pos;
      v = v.pow(static_cast<long>(parse_exponent()));
    }
    return v;
  }

  Cyclotomic parse_term() {
    Cyclotomic v = parse_factor();
    while (peek() == '*') {
      ++pos;
      v = v * parse_factor();
    }
    return v;
  }

  Cyclotomic parse_expr() {
    bool neg = false;
    const char c = peek();
    if (c == '+' || c == '-') {
      ++pos;
      neg = (c == '-');
    }
    Cyclotomic acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos;
      Cyclotomic rhs = parse_term();
      acc = (op == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text, unsigned order) {
  ExprParser p{text, 0, order};
  Cyclotomic v = p.parse_expr();
  if (!p.eof()) p.fail("unexpected trailing input", p.pos);
  return v;
}

}  // namespace twistcent
