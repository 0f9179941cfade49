#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "twistcent/matrix.hpp"

namespace twistcent::testutil {

// Deterministic small-integer draw; engine output is pinned by the standard,
// unlike std::uniform_int_distribution.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Cyclotomic rand_cyc(std::mt19937_64& rng, unsigned order, long bound = 2) {
  std::vector<Rational> poly;
  for (unsigned i = 0; i < euler_phi(order); ++i)
    poly.emplace_back(rand_range(rng, -bound, bound));
  return Cyclotomic::from_poly(order, std::move(poly));
}

inline Cyclotomic rand_nonzero_cyc(std::mt19937_64& rng, unsigned order,
                                   long bound = 2) {
  while (true) {
    Cyclotomic c = rand_cyc(rng, order, bound);
    if (!c.is_zero()) return c;
  }
}

inline Matrix rand_matrix(std::mt19937_64& rng, unsigned n, unsigned order,
                          long bound = 2) {
  Matrix out(n, n, order);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out.set(i, j, rand_cyc(rng, order, bound));
  return out;
}

inline Matrix rand_invertible(std::mt19937_64& rng, unsigned n, unsigned order,
                              long bound = 2) {
  while (true) {
    Matrix m = rand_matrix(rng, n, order, bound);
    if (!det(m).is_zero()) return m;
  }
}

// Independent determinant oracle: the Leibniz permutation sum.
inline Cyclotomic det_leibniz(const Matrix& a) {
  const unsigned n = a.rows();
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  Cyclotomic acc(a.order());
  do {
    // Parity by counting inversions.
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Cyclotomic term(a.order(), 1L);
    for (unsigned i = 0; i < n; ++i) term *= a.at(i, perm[i]);
    if (inversions % 2 == 0)
      acc += term;
    else
      acc -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Independent inverse oracle: adjugate over the Leibniz determinant.
inline Matrix inverse_adjugate(const Matrix& a) {
  const unsigned n = a.rows();
  const Cyclotomic d = det_leibniz(a);
  if (n == 1) {
    Matrix out(1, 1, a.order());
    out.set(0, 0, d.inverse());
    return out;
  }
  Matrix adj(n, n, a.order());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1, a.order());
      for (unsigned r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (unsigned c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.set(mr, mc, a.at(r, c));
          ++mc;
        }
        ++mr;
      }
      Cyclotomic cof = det_leibniz(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.set(j, i, cof);  // transposed cofactor
    }
  return adj.scaled(d.inverse());
}

// Unit matrix E_{ij} (0-based indices).
inline Matrix unit_matrix(unsigned n, unsigned order, unsigned i, unsigned j) {
  Matrix out(n, n, order);
  out.set(i, j, Cyclotomic(order, 1L));
  return out;
}

}  // namespace twistcent::testutil
