#pragma once

#include <string>
#include <vector>

#include "twistcent/cyclotomic.hpp"

namespace twistcent {

// Dense matrix over Q(zeta_m), row-major. All entries share one cyclotomic
// order. Zero-row matrices are allowed (they arise as stacked bases of the
// zero space).
class Matrix {
 public:
  Matrix(unsigned rows, unsigned cols, unsigned order);
  static Matrix identity(unsigned n, unsigned order);
  static Matrix from_rows(std::vector<std::vector<Cyclotomic>> rows);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  unsigned order() const { return order_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Cyclotomic& at(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, Cyclotomic v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Cyclotomic& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Matrix literal in the entry grammar: [[a,b],[c,d]].
  std::string to_string() const;

  // Row-major vectorization: entry (i,j) lands at index i*cols + j.
  std::vector<Cyclotomic> vectorize() const;
  static Matrix from_vector(const std::vector<Cyclotomic>& vec, unsigned n,
                            unsigned order);

 private:
  unsigned rows_, cols_, order_;
  std::vector<Cyclotomic> entries_;
};

// Exact determinant: cofactor expansion for n <= 4, fraction-free
// elimination above.
Cyclotomic det(const Matrix& a);

unsigned rank(const Matrix& a);

// Exact inverse; throws std::domain_error on a singular input.
Matrix inverse(const Matrix& a);

// Reduced row echelon form. Pivot selection is deterministic: the first
// nonzero entry in each column, columns scanned left to right.
Matrix rref(const Matrix& a, std::vector<unsigned>* pivot_cols = nullptr);

// Canonical basis of the right nullspace: one vector per free column in
// increasing column order, with the free coordinate set to 1. Empty list
// means trivial kernel.
std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& a);

// A linear span of n x n matrices, kept as a linearly independent basis.
class MatrixSpan {
 public:
  MatrixSpan(unsigned n, unsigned order);  // zero space
  explicit MatrixSpan(std::vector<Matrix> basis);

  unsigned n() const { return n_; }
  unsigned order() const { return order_; }
  unsigned dimension() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }

  bool contains(const Matrix& x) const;

  // dim x n^2 matrix whose rows are the vectorized basis elements.
  Matrix stacked() const;
  // RREF of stacked(); two spans are equal iff these agree.
  Matrix canonical_rows() const;

 private:
  unsigned n_, order_;
  std::vector<Matrix> basis_;
};

}  // namespace twistcent
