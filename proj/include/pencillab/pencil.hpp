#ifndef PENCILLAB_PENCIL_HPP
#define PENCILLAB_PENCIL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pencillab/matrix.hpp"
#include "pencillab/polynomial.hpp"

namespace pencillab {

/// A Jacobi-type pencil J5 - lambda*J3 given by finite prefixes of the
/// matrix entries plus the seed constants of p_1 = alpha*lambda + beta.
///
/// J3 is tridiagonal: diagonal b_k, off-diagonal a_k > 0.
/// J5 is five-diagonal: diagonal alpha5_n, first off-diagonal beta5_n,
/// second off-diagonal gamma_n > 0.
template <typename T>
struct PencilData {
  std::vector<T> a;
  std::vector<T> b;
  std::vector<T> alpha5;
  std::vector<T> beta5;
  std::vector<T> gamma;
  T alpha_const{};
  T beta_const{};
};

using Pencil = PencilData<Rat>;
using PencilF = PencilData<double>;

/// Generating p_0..p_K uses the recurrence at n = 0..K-2, which touches
/// index n in every sequence; prefixes of length K-1 are required.
template <typename T>
void validate_pencil(const PencilData<T>& p, int depth) {
  for (const T& ak : p.a)
    if (!(ak > T(0))) throw Error("nonpositive-a", "J3 off-diagonal entries must be positive");
  for (const T& gn : p.gamma)
    if (!(gn > T(0))) throw Error("nonpositive-gamma", "J5 second subdiagonal entries must be positive");
  if (!(p.alpha_const > T(0)))
    throw Error("nonpositive-alpha-const", "the pencil constant alpha must be positive");
  const std::size_t need = depth >= 2 ? static_cast<std::size_t>(depth - 1) : 0;
  if (p.a.size() < need || p.b.size() < need || p.alpha5.size() < need || p.beta5.size() < need ||
      p.gamma.size() < need)
    throw Error("insufficient-prefix",
                "sequence prefixes too short for depth " + std::to_string(depth));
}

/// p_0 = 1, p_1 = alpha*lambda + beta, then the four-term relation at
/// index n solved for p_{n+2} (division by gamma_n > 0):
///   gamma_{n-2} p_{n-2} + (beta5_{n-1} - lambda a_{n-1}) p_{n-1}
///   + (alpha5_n - lambda b_n) p_n + (beta5_n - lambda a_n) p_{n+1}
///   + gamma_n p_{n+2} = 0.
template <typename T>
std::vector<Polynomial<T>> associated_polynomials(const PencilData<T>& pen, int depth) {
  validate_pencil(pen, depth);
  std::vector<Polynomial<T>> p;
  p.reserve(static_cast<std::size_t>(depth) + 1);
  p.push_back(Polynomial<T>::constant(T(1)));
  if (depth >= 1) p.push_back(Polynomial<T>{pen.beta_const, pen.alpha_const});
  for (int n = 0; n + 2 <= depth; ++n) {
    Polynomial<T> acc;
    if (n >= 2) acc += p[static_cast<std::size_t>(n - 2)] * pen.gamma[static_cast<std::size_t>(n - 2)];
    if (n >= 1) {
      const auto& prev = p[static_cast<std::size_t>(n - 1)];
      acc += prev * pen.beta5[static_cast<std::size_t>(n - 1)];
      acc -= prev.shifted_up(1) * pen.a[static_cast<std::size_t>(n - 1)];
    }
    const auto& cur = p[static_cast<std::size_t>(n)];
    acc += cur * pen.alpha5[static_cast<std::size_t>(n)];
    acc -= cur.shifted_up(1) * pen.b[static_cast<std::size_t>(n)];
    const auto& nxt = p[static_cast<std::size_t>(n + 1)];
    acc += nxt * pen.beta5[static_cast<std::size_t>(n)];
    acc -= nxt.shifted_up(1) * pen.a[static_cast<std::size_t>(n)];
    p.push_back(-acc * (T(1) / pen.gamma[static_cast<std::size_t>(n)]));
  }
  return p;
}

/// Drops the first row and column of J3 and J5; the new constants are
/// a_0/gamma_0 and -beta5_0/gamma_0.
template <typename T>
PencilData<T> shifted_pencil(const PencilData<T>& p) {
  if (p.a.size() < 2 || p.b.size() < 2 || p.alpha5.size() < 2 || p.beta5.size() < 2 ||
      p.gamma.size() < 2)
    throw Error("insufficient-prefix", "shifting requires prefixes of length >= 2");
  PencilData<T> out;
  out.a.assign(p.a.begin() + 1, p.a.end());
  out.b.assign(p.b.begin() + 1, p.b.end());
  out.alpha5.assign(p.alpha5.begin() + 1, p.alpha5.end());
  out.beta5.assign(p.beta5.begin() + 1, p.beta5.end());
  out.gamma.assign(p.gamma.begin() + 1, p.gamma.end());
  out.alpha_const = p.a[0] / p.gamma[0];
  out.beta_const = -p.beta5[0] / p.gamma[0];
  return out;
}

/// order 1: u_0 = 0, u_k = f_{k-1} with f the associated polynomials of
/// the shifted pencil; order 2: w_0 = w_1 = 0, w_k = f~_{k-2} from the
/// double-shifted pencil.
template <typename T>
std::vector<Polynomial<T>> shifted_solutions(const PencilData<T>& p, int order, int depth) {
  if (order != 1 && order != 2) throw Error("bad-order", "shift order must be 1 or 2");
  std::vector<Polynomial<T>> out(static_cast<std::size_t>(order));  // leading zeros
  if (depth < order) {
    out.resize(static_cast<std::size_t>(depth) + 1);
    return out;
  }
  PencilData<T> base = shifted_pencil(p);
  if (order == 2) base = shifted_pencil(base);
  const auto f = associated_polynomials(base, depth - order);
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

/// Exact residual of the four-term relation at index n for an arbitrary
/// polynomial sequence; the zero polynomial means the relation holds.
template <typename T>
Polynomial<T> recurrence_residual(const PencilData<T>& pen, const std::vector<Polynomial<T>>& seq,
                                  int n) {
  if (n < 0 || seq.size() < static_cast<std::size_t>(n) + 3)
    throw Error("index-out-of-range", "sequence entries up to n+2 are required");
  if (pen.a.size() <= static_cast<std::size_t>(n) || pen.b.size() <= static_cast<std::size_t>(n) ||
      pen.alpha5.size() <= static_cast<std::size_t>(n) ||
      pen.beta5.size() <= static_cast<std::size_t>(n) ||
      pen.gamma.size() <= static_cast<std::size_t>(n))
    throw Error("insufficient-prefix", "pencil prefixes too short for residual index");
  Polynomial<T> acc;
  if (n >= 2) acc += seq[static_cast<std::size_t>(n - 2)] * pen.gamma[static_cast<std::size_t>(n - 2)];
  if (n >= 1) {
    const auto& prev = seq[static_cast<std::size_t>(n - 1)];
    acc += prev * pen.beta5[static_cast<std::size_t>(n - 1)];
    acc -= prev.shifted_up(1) * pen.a[static_cast<std::size_t>(n - 1)];
  }
  const auto& cur = seq[static_cast<std::size_t>(n)];
  acc += cur * pen.alpha5[static_cast<std::size_t>(n)];
  acc -= cur.shifted_up(1) * pen.b[static_cast<std::size_t>(n)];
  const auto& nxt = seq[static_cast<std::size_t>(n + 1)];
  acc += nxt * pen.beta5[static_cast<std::size_t>(n)];
  acc -= nxt.shifted_up(1) * pen.a[static_cast<std::size_t>(n)];
  acc += seq[static_cast<std::size_t>(n + 2)] * pen.gamma[static_cast<std::size_t>(n)];
  return acc;
}

/// J5 = J3^2 pencil of a Jacobi matrix: alpha5_n = a_{n-1}^2 + b_n^2 + a_n^2,
/// beta5_n = a_n (b_n + b_{n+1}), gamma_n = a_n a_{n+1}; constants 1/a_0 and
/// -b_0/a_0 seed p_1 equal to the first orthonormal polynomial.
template <typename T>
PencilData<T> degenerate_from_jacobi(const std::vector<T>& a, const std::vector<T>& b) {
  for (const T& ak : a)
    if (!(ak > T(0))) throw Error("nonpositive-a", "Jacobi off-diagonal entries must be positive");
  if (a.empty() || b.empty()) throw Error("insufficient-prefix", "empty Jacobi prefix");
  PencilData<T> out;
  out.a = a;
  out.b = b;
  const std::size_t la = a.size(), lb = b.size();
  for (std::size_t n = 0; n < la && n < lb; ++n) {
    const T am1 = n >= 1 ? a[n - 1] : T(0);
    out.alpha5.push_back(am1 * am1 + b[n] * b[n] + a[n] * a[n]);
  }
  for (std::size_t n = 0; n < la && n + 1 < lb; ++n) out.beta5.push_back(a[n] * (b[n] + b[n + 1]));
  for (std::size_t n = 0; n + 1 < la; ++n) out.gamma.push_back(a[n] * a[n + 1]);
  out.alpha_const = T(1) / a[0];
  out.beta_const = -b[0] / a[0];
  return out;
}

/// Both sides of the Christoffel-Darboux analog at (lambda, y), evaluated
/// exactly. The left side is the weighted partial sum up to n; the right
/// side is the three divided-difference terms.
template <typename T>
std::pair<T, T> christoffel_darboux(const PencilData<T>& pen, int n, const T& lam, const T& y) {
  if (lam == y) throw Error("equal-arguments", "the identity requires lambda != y");
  if (n < 1) throw Error("index-out-of-range", "n >= 1 required");
  const auto p = associated_polynomials(pen, n + 2);

  T lhs(0);
  for (int k = 0; k <= n; ++k) {
    T weight = pen.b[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)].eval(y) +
               pen.a[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k + 1)].eval(y);
    if (k >= 1)
      weight += pen.a[static_cast<std::size_t>(k - 1)] * p[static_cast<std::size_t>(k - 1)].eval(y);
    lhs += weight * p[static_cast<std::size_t>(k)].eval(lam);
  }

  const auto bracket = [&](int i, int j) {
    return p[static_cast<std::size_t>(i)].eval(lam) * p[static_cast<std::size_t>(j)].eval(y) -
           p[static_cast<std::size_t>(i)].eval(y) * p[static_cast<std::size_t>(j)].eval(lam);
  };
  const T den = lam - y;
  T rhs = pen.gamma[static_cast<std::size_t>(n - 1)] * bracket(n + 1, n - 1);
  rhs += pen.gamma[static_cast<std::size_t>(n)] * bracket(n + 2, n);
  rhs += (pen.beta5[static_cast<std::size_t>(n)] - pen.a[static_cast<std::size_t>(n)] * lam) *
         bracket(n + 1, n);
  rhs = rhs / den;
  return {lhs, rhs};
}

/// Upper-left (j x j) corner of J3.
template <typename T>
Matrix<T> truncated_j3(const PencilData<T>& p, std::size_t j) {
  Matrix<T> m(j, j, T(0));
  for (std::size_t i = 0; i < j; ++i) {
    m.at(i, i) = p.b.at(i);
    if (i + 1 < j) {
      m.at(i, i + 1) = p.a.at(i);
      m.at(i + 1, i) = p.a.at(i);
    }
  }
  return m;
}

/// Upper-left (j x j) corner of J5.
template <typename T>
Matrix<T> truncated_j5(const PencilData<T>& p, std::size_t j) {
  Matrix<T> m(j, j, T(0));
  for (std::size_t i = 0; i < j; ++i) {
    m.at(i, i) = p.alpha5.at(i);
    if (i + 1 < j) {
      m.at(i, i + 1) = p.beta5.at(i);
      m.at(i + 1, i) = p.beta5.at(i);
    }
    if (i + 2 < j) {
      m.at(i, i + 2) = p.gamma.at(i);
      m.at(i + 2, i) = p.gamma.at(i);
    }
  }
  return m;
}

}  // namespace pencillab

#endif
