#ifndef PENCILLAB_POLYNOMIAL_MATRIX_HPP
#define PENCILLAB_POLYNOMIAL_MATRIX_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pencillab/matrix.hpp"
#include "pencillab/polynomial.hpp"

namespace pencillab {

template <typename T>
using PolyMatrix = Matrix<Polynomial<T>>;

namespace detail {

template <typename T>
Polynomial<T> polymat_det_rec(const PolyMatrix<T>& m, std::uint32_t colmask, std::size_t row,
                              std::unordered_map<std::uint32_t, Polynomial<T>>& memo) {
  if (colmask == 0) return Polynomial<T>::constant(T(1));
  const auto found = memo.find(colmask);
  if (found != memo.end()) return found->second;

  Polynomial<T> acc;
  int parity = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    if (!(colmask & bit)) continue;
    const Polynomial<T>& entry = m.at(row, col);
    if (!entry.is_zero()) {
      const Polynomial<T> sub = polymat_det_rec(m, colmask & ~bit, row + 1, memo);
      if (parity % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    ++parity;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace detail

/// Exact determinant of a polynomial-entry matrix by cofactor (Laplace)
/// expansion with column-subset memoization. Sizes are capped at 12; the
/// intended inputs are desk-scale truncations.
template <typename T>
Polynomial<T> polymat_det(const PolyMatrix<T>& m) {
  if (!m.square()) throw Error("non-square", "determinant requires a square matrix");
  if (m.rows() > 12) throw Error("size-cap-exceeded", "polynomial determinant capped at size 12");
  if (m.rows() == 0) return Polynomial<T>::constant(T(1));
  std::unordered_map<std::uint32_t, Polynomial<T>> memo;
  const std::uint32_t full = (m.rows() == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m.rows()) - 1);
  return detail::polymat_det_rec(m, full, 0, memo);
}

}  // namespace pencillab

#endif
