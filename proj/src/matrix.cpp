#include "twistcent/matrix.hpp"

#include <utility>

namespace twistcent {

Matrix::Matrix(unsigned rows, unsigned cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order) {
  if (cols == 0) throw std::invalid_argument("Matrix: need at least one column");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Cyclotomic(order));
}

Matrix Matrix::identity(unsigned n, unsigned order) {
  Matrix out(n, n, order);
  for (unsigned i = 0; i < n; ++i) out.set(i, i, Cyclotomic(order, 1L));
  return out;
}

Matrix Matrix::from_rows(std::vector<std::vector<Cyclotomic>> rows) {
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("Matrix: empty row list");
  const unsigned r = static_cast<unsigned>(rows.size());
  const unsigned c = static_cast<unsigned>(rows[0].size());
  const unsigned order = rows[0][0].order();
  Matrix out(r, c, order);
  for (unsigned i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("Matrix: ragged row list");
    for (unsigned j = 0; j < c; ++j) out.set(i, j, std::move(rows[i][j]));
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

const Cyclotomic& Matrix::at(unsigned i, unsigned j) const {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("Matrix::at: index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void Matrix::set(unsigned i, unsigned j, Cyclotomic v) {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("Matrix::set: index out of range");
  if (v.order() != order_)
    throw std::invalid_argument("Matrix::set: mixed cyclotomic orders");
  entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(v);
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix addition: dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += o.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix subtraction: dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= o.entries_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(rows_, o.cols_, order_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.entries_[static_cast<std::size_t>(i) * o.cols_ + j] +=
            aik * o.at(k, j);
      }
    }
  return out;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  return entries_ == o.entries_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (unsigned i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += "[";
    for (unsigned j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::vector<Cyclotomic> Matrix::vectorize() const { return entries_; }

Matrix Matrix::from_vector(const std::vector<Cyclotomic>& vec, unsigned n,
                           unsigned order) {
  if (vec.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("from_vector: length is not n^2");
  Matrix out(n, n, order);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out.set(i, j, vec[i * n + j]);
  return out;
}

namespace {

Cyclotomic det_cofactor(const Matrix& a, std::vector<unsigned> rows,
                        std::vector<unsigned> cols) {
  const unsigned n = static_cast<unsigned>(rows.size());
  if (n == 1) return a.at(rows[0], cols[0]);
  Cyclotomic acc(a.order());
  for (unsigned j = 0; j < n; ++j) {
    const Cyclotomic& e = a.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
    std::vector<unsigned> sub_cols;
    for (unsigned t = 0; t < n; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Cyclotomic minor = det_cofactor(a, std::move(sub_rows), std::move(sub_cols));
    if (j % 2 == 0)
      acc += e * minor;
    else
      acc -= e * minor;
  }
  return acc;
}

Cyclotomic det_bareiss(Matrix m) {
  const unsigned n = m.rows();
  Cyclotomic prev(m.order(), 1L);
  bool negate = false;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      unsigned pivot = k;
      while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Cyclotomic(m.order());
      for (unsigned j = 0; j < n; ++j) {
        Cyclotomic tmp = m.at(k, j);
        m.set(k, j, m.at(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
      negate = !negate;
    }
    for (unsigned i = k + 1; i < n; ++i)
      for (unsigned j = k + 1; j < n; ++j) {
        Cyclotomic v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.set(i, j, v / prev);
      }
    prev = m.at(k, k);
  }
  Cyclotomic d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Cyclotomic det(const Matrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("det: matrix is not square");
  const unsigned n = a.rows();
  if (n == 0) return Cyclotomic(a.order(), 1L);
  if (n <= 4) {
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    return det_cofactor(a, idx, idx);
  }
  return det_bareiss(a);
}

Matrix rref(const Matrix& a, std::vector<unsigned>* pivot_cols) {
  Matrix m = a;
  if (pivot_cols) pivot_cols->clear();
  unsigned lead = 0;
  for (unsigned col = 0; col < m.cols() && lead < m.rows(); ++col) {
    unsigned pivot = lead;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (unsigned j = 0; j < m.cols(); ++j) {
        Cyclotomic tmp = m.at(lead, j);
        m.set(lead, j, m.at(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
    const Cyclotomic inv = m.at(lead, col).inverse();
    for (unsigned j = col; j < m.cols(); ++j)
      m.set(lead, j, m.at(lead, j) * inv);
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      const Cyclotomic factor = m.at(i, col);
      for (unsigned j = col; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) - factor * m.at(lead, j));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return m;
}

unsigned rank(const Matrix& a) {
  // Forward elimination only.
  Matrix m = a;
  unsigned r = 0;
  for (unsigned col = 0; col < m.cols() && r < m.rows(); ++col) {
    unsigned pivot = r;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (unsigned j = col; j < m.cols(); ++j) {
        Cyclotomic tmp = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
    const Cyclotomic inv = m.at(r, col).inverse();
    for (unsigned i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Cyclotomic factor = m.at(i, col) * inv;
      for (unsigned j = col; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) - factor * m.at(r, j));
    }
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("inverse: matrix is not square");
  const unsigned n = a.rows();
  Matrix aug(n, 2 * n, a.order());
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, n + i, Cyclotomic(a.order(), 1L));
  }
  std::vector<unsigned> pivots;
  Matrix r = rref(aug, &pivots);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Matrix out(n, n, a.order());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out.set(i, j, r.at(i, n + j));
  return out;
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& a) {
  std::vector<unsigned> pivots;
  const Matrix r = (a.rows() == 0) ? a : rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (unsigned p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (unsigned f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Cyclotomic> v(a.cols(), Cyclotomic(a.order()));
    v[f] = Cyclotomic(a.order(), 1L);
    for (unsigned i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixSpan::MatrixSpan(unsigned n, unsigned order) : n_(n), order_(order) {}

MatrixSpan::MatrixSpan(std::vector<Matrix> basis) {
  if (basis.empty())
    throw std::invalid_argument("MatrixSpan: empty basis; use the (n, order) constructor");
  n_ = basis[0].rows();
  order_ = basis[0].order();
  for (const Matrix& b : basis)
    if (!b.is_square() || b.rows() != n_ || b.order() != order_)
      throw std::invalid_argument("MatrixSpan: inconsistent basis matrices");
  basis_ = std::move(basis);
  if (rank(stacked()) != basis_.size())
    throw std::invalid_argument("MatrixSpan: basis is not linearly independent");
}

bool MatrixSpan::contains(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_)
    throw std::invalid_argument("MatrixSpan::contains: dimension mismatch");
  if (basis_.empty()) return x.is_zero();
  Matrix stackx(dimension() + 1, n_ * n_, order_);
  for (unsigned i = 0; i < dimension(); ++i) {
    auto v = basis_[i].vectorize();
    for (unsigned j = 0; j < v.size(); ++j) stackx.set(i, j, std::move(v[j]));
  }
  auto v = x.vectorize();
  for (unsigned j = 0; j < v.size(); ++j)
    stackx.set(dimension(), j, std::move(v[j]));
  return rank(stackx) == dimension();
}

Matrix MatrixSpan::stacked() const {
  Matrix out(dimension(), n_ * n_, order_);
  for (unsigned i = 0; i < dimension(); ++i) {
    auto v = basis_[i].vectorize();
    for (unsigned j = 0; j < v.size(); ++j) out.set(i, j, std::move(v[j]));
  }
  return out;
}

Matrix MatrixSpan::canonical_rows() const { return rref(stacked()); }

}  // namespace twistcent
