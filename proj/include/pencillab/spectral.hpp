#ifndef PENCILLAB_SPECTRAL_HPP
#define PENCILLAB_SPECTRAL_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "pencillab/matrix.hpp"
#include "pencillab/pencil.hpp"
#include "pencillab/polynomial.hpp"

namespace pencillab {

/// Exact coordinates of lambda^m in the basis p_0..p_m (triangular since
/// deg p_i = i); c[m] = 1 / leading(p_m).
inline std::vector<Rat> monomial_coords(const std::vector<Poly>& pbasis, int m) {
  if (pbasis.size() < static_cast<std::size_t>(m) + 1)
    throw Error("insufficient-basis", "basis polynomials p_0..p_m are required");
  std::vector<Rat> c(static_cast<std::size_t>(m) + 1, Rat(0));
  Poly residual = Poly::monomial(m);
  for (int i = m; i >= 0; --i) {
    const Rat ci = residual.coeff(i) / pbasis[static_cast<std::size_t>(i)].leading();
    c[static_cast<std::size_t>(i)] = ci;
    residual -= pbasis[static_cast<std::size_t>(i)] * ci;
  }
  if (!residual.is_zero()) throw Error("basis-degenerate", "basis is not triangular by degree");
  return c;
}

/// Moments s_{m,n} = S(lambda^m, lambda^n) of a spectral function together
/// with the leading principal (Hankel-type) determinants Delta_n > 0.
struct MomentTable {
  Matrix<Rat> s;
  std::vector<Rat> delta;  // delta[n] = Delta_n; Delta_{-1} = 1 implicitly

  int size() const { return static_cast<int>(s.rows()) - 1; }

  /// S(u, v) for real polynomials by bilinear contraction with the table.
  Rat pair(const Poly& u, const Poly& v) const {
    Rat acc(0);
    for (int i = 0; i <= u.degree(); ++i) {
      if (u.coeff(i) == 0) continue;
      for (int j = 0; j <= v.degree(); ++j)
        acc += u.coeff(i) * v.coeff(j) * s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return acc;
  }
};

/// Builds a moment table from any symmetric monomial pairing, then checks
/// Hankel positivity. A nonpositive determinant signals a bug upstream:
/// every genuine spectral function induces a positive-definite table.
inline MomentTable moment_table_from_pairing(const std::function<Rat(int, int)>& pairing, int m) {
  MomentTable out;
  out.s = Matrix<Rat>(static_cast<std::size_t>(m) + 1, static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      const Rat v = pairing(i, j);
      out.s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      out.s.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
  for (int n = 0; n <= m; ++n) {
    Matrix<Rat> lead(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        lead.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            out.s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    out.delta.push_back(det(lead));
    if (out.delta.back() <= 0)
      throw Error("hankel-not-positive", "Delta_" + std::to_string(n) + " <= 0");
  }
  return out;
}

/// The spectral function of a pencil, computed intrinsically: expand the
/// monomials in the associated basis and use S(p_i, p_j) = delta_{ij},
/// giving s_{m,n} = sum_i c_{m,i} c_{n,i}.
inline MomentTable moment_table(const Pencil& pen, int m) {
  const auto p = associated_polynomials(pen, m);
  std::vector<std::vector<Rat>> coords;
  coords.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) coords.push_back(monomial_coords(p, k));
  return moment_table_from_pairing(
      [&](int i, int j) {
        Rat acc(0);
        const auto& ci = coords[static_cast<std::size_t>(i)];
        const auto& cj = coords[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < std::min(ci.size(), cj.size()); ++k) acc += ci[k] * cj[k];
        return acc;
      },
      m);
}

struct DetrepResult {
  bool ok = false;
  Poly cofactor;  // the determinant polynomial with monomial last row
};

/// Cofactor polynomial of the determinant representation: rows j < n hold
/// (s_{0,j} ... s_{n,j}), the last row the monomials. Verified in squared
/// form, M_n^2 = Delta_{n-1} Delta_n p_n^2, plus a leading-sign check, so
/// no square root is ever formed.
inline DetrepResult detrep_check(const MomentTable& table, const std::vector<Poly>& pbasis, int n) {
  if (table.size() < n || pbasis.size() < static_cast<std::size_t>(n) + 1)
    throw Error("insufficient-table", "table and basis must reach index n");
  Poly cof;
  for (int k = 0; k <= n; ++k) {
    // minor over rows j=0..n-1, columns i != k
    Matrix<Rat> minor(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      int col = 0;
      for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        minor.at(static_cast<std::size_t>(j), static_cast<std::size_t>(col)) =
            table.s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        ++col;
      }
    }
    const Rat mk = det(minor);
    const Poly term = Poly::monomial(k, mk);
    if ((n + k) % 2 == 0)
      cof += term;
    else
      cof -= term;
  }
  DetrepResult out;
  out.cofactor = cof;
  const Rat dn = table.delta[static_cast<std::size_t>(n)];
  const Rat dn1 = n >= 1 ? table.delta[static_cast<std::size_t>(n - 1)] : Rat(1);
  const Poly& pn = pbasis[static_cast<std::size_t>(n)];
  out.ok = (cof * cof == (pn * pn) * (dn * dn1)) && sign(cof.leading()) == sign(pn.leading());
  return out;
}

/// Second-kind polynomials q_n = S_t((p_n(lambda) - p_n(t))/(lambda - t), 1):
/// contract the t-coefficients of the divided difference with s_{k,0}.
inline std::vector<Poly> second_kind(const Pencil& pen, const MomentTable& table, int depth) {
  const auto p = associated_polynomials(pen, depth);
  if (depth >= 1 && table.size() < depth - 1)
    throw Error("insufficient-table", "moments s_{k,0} for k <= depth-1 are required");
  std::vector<Poly> q;
  q.reserve(static_cast<std::size_t>(depth) + 1);
  for (int n = 0; n <= depth; ++n) {
    const auto dd = divided_difference(p[static_cast<std::size_t>(n)]);
    Poly acc;
    for (std::size_t k = 0; k < dd.t_coeffs.size(); ++k)
      acc += dd.t_coeffs[k] * table.s.at(k, 0);
    q.push_back(std::move(acc));
  }
  return q;
}

/// The four basic solutions of the fourth-order difference equation.
struct SolutionQuad {
  std::vector<Poly> p, q, u, w;
};

inline SolutionQuad make_solution_quad(const Pencil& pen, int depth) {
  SolutionQuad quad;
  quad.p = associated_polynomials(pen, depth);
  quad.q = second_kind(pen, moment_table(pen, depth >= 1 ? depth - 1 : 0), depth);
  quad.u = shifted_solutions(pen, 1, depth);
  quad.w = shifted_solutions(pen, 2, depth);
  return quad;
}

struct IndependenceResult {
  bool nonsingular = false;
  Rat determinant;
  Matrix<Rat> evaluation;  // rows n = 0..3, columns (p, q, u, w)
};

/// Evaluates the 4x4 matrix [p_n, q_n, u_n, w_n](lambda) for n = 0..3 and
/// reports exact nonsingularity at the sampled point.
inline IndependenceResult independence_check(const SolutionQuad& quad, const Rat& lam) {
  if (quad.p.size() < 4 || quad.q.size() < 4 || quad.u.size() < 4 || quad.w.size() < 4)
    throw Error("insufficient-quad", "all four families must be populated to n = 3");
  IndependenceResult out;
  out.evaluation = Matrix<Rat>(4, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    out.evaluation.at(n, 0) = quad.p[n].eval(lam);
    out.evaluation.at(n, 1) = quad.q[n].eval(lam);
    out.evaluation.at(n, 2) = quad.u[n].eval(lam);
    out.evaluation.at(n, 3) = quad.w[n].eval(lam);
  }
  out.determinant = det(out.evaluation);
  out.nonsingular = out.determinant != 0;
  return out;
}

}  // namespace pencillab

#endif
