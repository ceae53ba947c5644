#ifndef PENCILLAB_ODE_HPP
#define PENCILLAB_ODE_HPP

#include <vector>

#include "pencillab/matrix.hpp"
#include "pencillab/perturbation.hpp"
#include "pencillab/polynomial.hpp"

namespace pencillab {

/// Coefficient record of the parameterized fourth-order equation
///   c(t) y'''' + d(t) y''' + f(t) y'' + g(t) y' + h(t) y
///     + lambda (phi(t) y'' + psi(t) y' + theta(t) y) = 0,
/// with deg c <= 4, deg d <= 3, deg f <= 2, deg g <= 1, deg h = 0,
/// deg phi <= 2, deg psi <= 1, deg theta = 0.
struct OdeCoeffs {
  Rat c4, c3, c2, c1, c0;
  Rat d3, d2, d1, d0;
  Rat f2, f1, f0;
  Rat g1, g0;
  Rat h0;
  Rat phi2, phi1, phi0;
  Rat psi1, psi0;
  Rat theta0;

  Poly c_poly() const { return Poly{c0, c1, c2, c3, c4}; }
  Poly d_poly() const { return Poly{d0, d1, d2, d3}; }
  Poly f_poly() const { return Poly{f0, f1, f2}; }
  Poly g_poly() const { return Poly{g0, g1}; }
  Poly h_poly() const { return Poly{h0}; }
  Poly phi_poly() const { return Poly{phi0, phi1, phi2}; }
  Poly psi_poly() const { return Poly{psi0, psi1}; }
  Poly theta_poly() const { return Poly{theta0}; }
};

/// The coefficient set under which the perturbed Jacobi polynomials are
/// the unique polynomial eigensolutions, with lambda_n = n(n+a+b+1).
inline OdeCoeffs theorem42_coeffs(const Rat& a, const Rat& b) {
  if (!(a > -1) || !(b > -1)) throw Error("invalid-jacobi", "requires a, b > -1");
  OdeCoeffs co;
  co.c4 = -1;
  co.c3 = 1;
  co.c2 = 1;
  co.c1 = -1;
  co.c0 = 0;
  co.d3 = -(a + b + 10);
  co.d2 = 2 * b + 10;
  co.d1 = a - b + 4;
  co.d0 = -4;
  co.f2 = -6 * (a + b + 4);
  co.f1 = a + 9 * b + 22;
  co.f0 = 3 * a - 3 * b;
  co.g1 = -6 * (a + b + 2);
  co.g0 = 2 * a + 6 * b + 8;
  co.h0 = 0;
  co.phi2 = 1;
  co.phi1 = -1;
  co.phi0 = 0;
  co.psi1 = 4;
  co.psi0 = -2;
  co.theta0 = 2;
  return co;
}

namespace detail {

inline Rat ode_diag(const OdeCoeffs& co, int j, const Rat& lam) {
  const Rat jj(j);
  return jj * (jj - 1) * (jj - 2) * (jj - 3) * co.c4 + jj * (jj - 1) * (jj - 2) * co.d3 +
         jj * (jj - 1) * co.f2 + jj * co.g1 + co.h0 +
         lam * (jj * (jj - 1) * co.phi2 + jj * co.psi1 + co.theta0);
}

inline Rat ode_super1(const OdeCoeffs& co, int j, const Rat& lam) {
  const Rat jj(j);
  return (jj + 1) * jj * (jj - 1) * (jj - 2) * co.c3 + (jj + 1) * jj * (jj - 1) * co.d2 +
         (jj + 1) * jj * co.f1 + (jj + 1) * co.g0 +
         lam * ((jj + 1) * jj * co.phi1 + (jj + 1) * co.psi0);
}

inline Rat ode_super2(const OdeCoeffs& co, int j, const Rat& lam) {
  const Rat jj(j);
  return (jj + 2) * (jj + 1) * jj * (jj - 1) * co.c2 + (jj + 2) * (jj + 1) * jj * co.d1 +
         (jj + 2) * (jj + 1) * co.f0 + lam * (jj + 2) * (jj + 1) * co.phi0;
}

inline Rat ode_super3(const OdeCoeffs& co, int j) {
  const Rat jj(j);
  return (jj + 3) * (jj + 2) * (jj + 1) * jj * co.c1 + (jj + 3) * (jj + 2) * (jj + 1) * co.d0;
}

inline Rat ode_super4(const OdeCoeffs& co, int j) {
  const Rat jj(j);
  return (jj + 4) * (jj + 3) * (jj + 2) * (jj + 1) * co.c0;
}

}  // namespace detail

/// The (n+1) x (n+1) linear system whose kernel vectors are exactly the
/// coefficient lists of degree <= n polynomial solutions (with mu_{n+1} =
/// mu_{n+2} = mu_{n+3} = 0). Row j carries the t^j coefficient equation.
inline Matrix<Rat> build_system(const OdeCoeffs& co, int n, const Rat& lam) {
  if (n < 0) throw Error("invalid-count", "degree must be nonnegative");
  Matrix<Rat> m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    m.at(j, j) = detail::ode_diag(co, j, lam);
    if (j + 1 <= n) m.at(j, j + 1) = detail::ode_super1(co, j, lam);
    if (j + 2 <= n) m.at(j, j + 2) = detail::ode_super2(co, j, lam);
    if (j + 3 <= n) m.at(j, j + 3) = detail::ode_super3(co, j);
    if (j + 4 <= n) m.at(j, j + 4) = detail::ode_super4(co, j);
  }
  return m;
}

struct PolynomialEigen {
  Rat lambda;
  std::vector<Rat> mu;  // scale fixed by mu_n = 1
};

/// lambda from the j = n diagonal bracket (linear in lambda), then strict
/// back-substitution j = n-1 .. 0 with mu_n = 1. Pivot failures surface as
/// errors; they mark exactly the degenerate cases where uniqueness fails.
inline PolynomialEigen solve_polynomial_eigen(const OdeCoeffs& co, int n) {
  if (n < 0) throw Error("invalid-count", "degree must be nonnegative");
  const Rat jn(n);
  const Rat lam_coef = jn * (jn - 1) * co.phi2 + jn * co.psi1 + co.theta0;
  if (lam_coef == 0)
    throw Error("lambda-indeterminate", "the j = n equation does not determine lambda");
  const Rat constant = jn * (jn - 1) * (jn - 2) * (jn - 3) * co.c4 + jn * (jn - 1) * (jn - 2) * co.d3 +
                       jn * (jn - 1) * co.f2 + jn * co.g1 + co.h0;
  PolynomialEigen out;
  out.lambda = -constant / lam_coef;
  out.mu.assign(static_cast<std::size_t>(n) + 1, Rat(0));
  out.mu[static_cast<std::size_t>(n)] = 1;
  for (int j = n - 1; j >= 0; --j) {
    Rat acc = detail::ode_super1(co, j, out.lambda) * out.mu[static_cast<std::size_t>(j + 1)];
    if (j + 2 <= n) acc += detail::ode_super2(co, j, out.lambda) * out.mu[static_cast<std::size_t>(j + 2)];
    if (j + 3 <= n) acc += detail::ode_super3(co, j) * out.mu[static_cast<std::size_t>(j + 3)];
    if (j + 4 <= n) acc += detail::ode_super4(co, j) * out.mu[static_cast<std::size_t>(j + 4)];
    const Rat diag = detail::ode_diag(co, j, out.lambda);
    if (diag == 0)
      throw Error("degenerate-diagonal", "back-substitution pivot vanished at j = " + std::to_string(j));
    out.mu[static_cast<std::size_t>(j)] = -acc / diag;
  }
  return out;
}

/// Exact residual polynomial of the equation at (lambda, y); the zero
/// polynomial if and only if y solves it.
inline Poly verify_ode(const OdeCoeffs& co, const Rat& lam, const Poly& y) {
  const Poly y1 = y.derivative();
  const Poly y2 = y1.derivative();
  const Poly y3 = y2.derivative();
  const Poly y4 = y3.derivative();
  Poly res = co.c_poly() * y4 + co.d_poly() * y3 + co.f_poly() * y2 + co.g_poly() * y1 +
             co.h_poly() * y;
  res += (co.phi_poly() * y2 + co.psi_poly() * y1 + co.theta_poly() * y) * lam;
  return res;
}

/// Monic-scaled perturbed Jacobi polynomial p~_n = r~_n - (r~_n - r~_n(0))/t;
/// the homogeneous equation is scale-invariant, so the monic input keeps
/// the pipeline exact.
inline Poly perturbed_jacobi(const Rat& a, const Rat& b, int n) {
  if (n < 0) throw Error("invalid-count", "degree must be nonnegative");
  const auto rec = jacobi_monic(a, b, n + 1);
  const auto r = monic_polynomials(rec, n);
  return r[static_cast<std::size_t>(n)] -
         divided_difference_at(r[static_cast<std::size_t>(n)], Rat(0));
}

}  // namespace pencillab

#endif
