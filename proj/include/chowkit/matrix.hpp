#pragma once

// Dense matrices over an exact commutative ring, with Pfaffians, and
// fraction-free (Bareiss) determinant and rank over the rationals.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/error.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
    return out;
  }

  template <typename F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Product; `zero` supplies the additive identity of T.
template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not match");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

template <typename T>
bool is_antisymmetric(const Matrix<T>& m, const std::function<bool(const T&)>& is_zero) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!is_zero(m(i, j) + m(j, i))) return false;
  return true;
}

/// Pfaffian by expansion along the first row. `zero` and `one` are the ring's
/// identities. The caller guarantees antisymmetry.
template <typename T>
T pfaffian(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("pfaffian needs a square matrix");
  if (n % 2) throw DomainError("pfaffian needs even size");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::function<T(const std::vector<std::size_t>&)> rec = [&](const std::vector<std::size_t>& ix) -> T {
    if (ix.empty()) return one;
    T total = zero;
    for (std::size_t j = 1; j < ix.size(); ++j) {
      const T& entry = m(ix[0], ix[j]);
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < ix.size(); ++k)
        if (k != j) rest.push_back(ix[k]);
      T sub = entry * rec(rest);
      if (j % 2)
        total = total + sub;
      else
        total = total - sub;
    }
    return total;
  };
  return rec(idx);
}

namespace detail {

/// Bareiss elimination in place; returns rank and the determinant sign flips.
inline std::size_t bareiss(Matrix<Rational>& a, int& sign, std::vector<std::size_t>* pivot_cols = nullptr) {
  const std::size_t n = a.rows(), m = a.cols();
  Rational prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    if (pivot_cols) pivot_cols->push_back(c);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace detail

inline std::size_t rank(Matrix<Rational> a, std::vector<std::size_t>* pivot_cols = nullptr) {
  int sign = 1;
  return detail::bareiss(a, sign, pivot_cols);
}

inline Rational determinant(Matrix<Rational> a) {
  if (a.rows() != a.cols()) throw DomainError("determinant needs a square matrix");
  if (a.rows() == 0) return 1;
  int sign = 1;
  std::vector<std::size_t> piv;
  const std::size_t r = detail::bareiss(a, sign, &piv);
  if (r < a.rows()) return 0;
  return sign * a(a.rows() - 1, a.cols() - 1);
}

/// Solves A x = b for a square invertible A.
inline std::vector<Rational> solve(Matrix<Rational> A, std::vector<Rational> b) {
  const std::size_t n = A.rows();
  if (A.cols() != n || b.size() != n) throw DomainError("solve needs a square system");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A(p, c) == 0) ++p;
    if (p == n) throw DomainError("singular system");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || A(i, c) == 0) continue;
      const Rational f = A(i, c) / A(c, c);
      for (std::size_t j = c; j < n; ++j) A(i, j) -= f * A(c, j);
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= A(i, i);
  return b;
}

inline Matrix<Rational> identity_matrix(std::size_t n) {
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace chowkit
