#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "ponsyz/error.hpp"
#include "ponsyz/exact/scalar.hpp"

namespace ponsyz {

/// Dense row-major matrix over an exact field (Rational or ModP).
template <class F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  Matrix(std::initializer_list<std::initializer_list<F>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<F> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class F>
std::vector<F> multiply(const Matrix<F>& m, std::span<const F> x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::InvalidArgument, "matrix-vector dimension mismatch");
  std::vector<F> y(m.rows(), F(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)) && !is_zero(x[j])) y[i] += m(i, j) * x[j];
  return y;
}

template <class F>
std::vector<F> multiply(const Matrix<F>& m, const std::vector<F>& x) {
  return multiply(m, std::span<const F>(x));
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
  Matrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

/// Reduced row echelon form together with the pivot column of each
/// nonzero row. Pivots are chosen as the first nonzero entry in column
/// order, top to bottom, so the result is deterministic.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, lead_row);

    const F inv = F(1) / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(lead_row, j))) m(i, j) -= factor * m(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Right null space. One vector per free column (in increasing column
/// order) with that free variable set to 1 and the other free variables 0.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(m.cols(), F(0));
    x[free] = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Left null space: vectors y with y^T m = 0.
template <class F>
std::vector<std::vector<F>> cokernel_basis(const Matrix<F>& m) {
  return kernel_basis(transpose(m));
}

/// One solution of m x = rhs with free variables set to 0, or nullopt when
/// the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, std::span<const F> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "solve: rhs length differs from row count");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const Echelon<F> e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& rhs) {
  return solve(m, std::span<const F>(rhs));
}

/// Bareiss fraction-free elimination. Every intermediate division is exact
/// in the integers when the input is integral.
template <class F>
F det_fraction_free(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return F(1);

  F previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = F(0);
    }
    previous = m(k, k);
  }
  return negate ? F(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace ponsyz
