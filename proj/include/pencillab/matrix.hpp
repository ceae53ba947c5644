#ifndef PENCILLAB_MATRIX_HPP
#define PENCILLAB_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pencillab/error.hpp"
#include "pencillab/rational.hpp"

namespace pencillab {

/// Dense row-major matrix over an arbitrary scalar (Rat, double, Polynomial<...>).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

/// Exact determinant of a rational matrix: rows are scaled to integers,
/// then fraction-free (Bareiss) elimination runs over big integers.
inline Rat det(const Matrix<Rat>& m) {
  if (!m.square()) throw Error("non-square", "determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  Rat scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt lcm(1);
    for (std::size_t j = 0; j < n; ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
    scale /= Rat(lcm);
    for (std::size_t j = 0; j < n; ++j) {
      const Rat v = m.at(i, j) * Rat(lcm);
      a[i][j] = numerator(v);
    }
  }

  BigInt prev(1);
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rat(0);
      std::swap(a[k], a[pivot]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rat(a[n - 1][n - 1]) * scale * sgn;
}

/// Exact solve A x = b by Gaussian elimination over the rationals.
inline std::vector<Rat> solve_linear_exact(const Matrix<Rat>& a, const std::vector<Rat>& b) {
  if (!a.square()) throw Error("non-square", "solve requires a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw Error("dimension-mismatch", "rhs length does not match matrix size");

  Matrix<Rat> m = a;
  std::vector<Rat> rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error("singular-system", "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m.at(row, col) == 0) continue;
      const Rat f = m.at(row, col) / m.at(col, col);
      for (std::size_t j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m.at(i, j) * x[j];
    x[i] = acc / m.at(i, i);
  }
  return x;
}

/// Sylvester criterion with exact arithmetic.
inline bool is_positive_definite(const Matrix<Rat>& m) {
  if (!m.square()) throw Error("non-square", "definiteness requires a square matrix");
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix<Rat> lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

}  // namespace pencillab

#endif
