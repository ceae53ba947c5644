#ifndef PENCILLAB_POLYNOMIAL_HPP
#define PENCILLAB_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pencillab/error.hpp"
#include "pencillab/rational.hpp"

namespace pencillab {

/// Dense univariate polynomial over an exact or floating scalar domain.
/// coeff(k) is the coefficient of x^k. Invariant: the stored coefficient
/// list is empty (zero polynomial) or ends in a nonzero value.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;

  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  /// c * x^k
  static Polynomial monomial(int k, T c = T(1)) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  T coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Exact Horner evaluation. The point type may be wider than the
  /// coefficient type (e.g. complex points for double coefficients).
  template <typename U>
  U eval(const U& x) const {
    U acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * T(static_cast<int>(k));
    return Polynomial(std::move(out));
  }

  /// Multiply by x^k.
  Polynomial shifted_up(int k) const {
    if (is_zero()) return {};
    std::vector<T> out(coeffs_.size() + static_cast<std::size_t>(k), T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<T> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& s) {
    if (s == T(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Poly = Polynomial<Rat>;
using PolyD = Polynomial<double>;

/// p(x) - p(t) = (x - t) * r(x, t); r is stored by powers of t with
/// polynomial-in-x coefficients.
template <typename T>
struct Bivariate {
  std::vector<Polynomial<T>> t_coeffs;

  /// Degree in t; -1 when identically zero.
  int degree_t() const { return static_cast<int>(t_coeffs.size()) - 1; }

  T eval(const T& x, const T& t) const {
    T acc{};
    for (auto it = t_coeffs.rbegin(); it != t_coeffs.rend(); ++it) acc = acc * t + it->eval(x);
    return acc;
  }
};

/// (p(x) - p(t)) / (x - t) as an exact bivariate polynomial: the t^i
/// coefficient is sum_{j >= i+1} p_j x^{j-1-i}.
template <typename T>
Bivariate<T> divided_difference(const Polynomial<T>& p) {
  Bivariate<T> out;
  const int n = p.degree();
  for (int i = 0; i + 1 <= n; ++i) {
    std::vector<T> coef(static_cast<std::size_t>(n - i), T(0));
    for (int j = i + 1; j <= n; ++j) coef[static_cast<std::size_t>(j - 1 - i)] = p.coeff(j);
    out.t_coeffs.emplace_back(std::move(coef));
  }
  while (!out.t_coeffs.empty() && out.t_coeffs.back().is_zero()) out.t_coeffs.pop_back();
  return out;
}

/// (p(x) - p(d)) / (x - d) by synthetic division; always a polynomial.
template <typename T>
Polynomial<T> divided_difference_at(const Polynomial<T>& p, const T& d) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<T> q(static_cast<std::size_t>(n), T(0));
  T carry = p.coeff(n);
  for (int j = n - 1; j >= 0; --j) {
    q[static_cast<std::size_t>(j)] = carry;
    carry = p.coeff(j) + carry * d;
  }
  return Polynomial<T>(std::move(q));
}

template <typename T>
Polynomial<double> to_double_poly(const Polynomial<T>& p) {
  std::vector<double> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = to_double(p.coeffs()[i]);
  return Polynomial<double>(std::move(out));
}

inline std::complex<double> eval_complex(const Poly& p, std::complex<double> z) {
  std::complex<double> acc{0.0, 0.0};
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + std::complex<double>(to_double(p.coeff(k)), 0.0);
  return acc;
}

}  // namespace pencillab

#endif
