#ifndef PENCILLAB_PERTURBATION_HPP
#define PENCILLAB_PERTURBATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "pencillab/pencil.hpp"
#include "pencillab/polynomial.hpp"
#include "pencillab/spectral.hpp"

namespace pencillab {

/// Parameters of the perturbed multiplication operator
/// A[p] = lambda * p + p(0) * (c*lambda + d), with c > -1.
struct PerturbationParams {
  Rat c;
  Rat d;

  PerturbationParams(Rat c_, Rat d_) : c(std::move(c_)), d(std::move(d_)) {
    if (!(c > -1)) throw Error("invalid-c", "the perturbation requires c > -1");
  }
};

/// Monic three-term recurrence data:
///   r~_{k+1} = (x - alpha_k) r~_k - beta_k r~_{k-1},
/// with beta[0] unused and beta_k > 0 for k >= 1. All entries rational, so
/// the whole monic pipeline stays exact.
struct MonicRecurrence {
  std::vector<Rat> alpha;
  std::vector<Rat> beta;

  void validate() const {
    for (std::size_t k = 1; k < beta.size(); ++k)
      if (!(beta[k] > 0)) throw Error("nonpositive-beta", "monic beta entries must be positive");
  }
};

/// Monic Jacobi recurrence for the weight (1-x)^a (1+x)^b on [-1, 1]
/// normalized to unit mass; the standard closed forms, rational in (a, b).
inline MonicRecurrence jacobi_monic(const Rat& a, const Rat& b, int count) {
  if (!(a > -1) || !(b > -1)) throw Error("invalid-jacobi", "Jacobi weight requires a, b > -1");
  MonicRecurrence rec;
  rec.beta.push_back(Rat(0));
  for (int k = 0; k < count; ++k) {
    if (k == 0)
      rec.alpha.push_back((b - a) / (a + b + 2));
    else {
      const Rat s = 2 * k + a + b;
      rec.alpha.push_back((b * b - a * a) / (s * (s + 2)));
    }
  }
  for (int k = 1; k < count; ++k) {
    if (k == 1)
      rec.beta.push_back(4 * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 2) * (a + b + 3)));
    else {
      const Rat s = 2 * k + a + b;
      rec.beta.push_back(4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1)));
    }
  }
  return rec;
}

/// Measure with all moments finite and unit total mass, in one of three
/// exact forms: finite discrete, Jacobi weight, or directly by its monic
/// recurrence coefficients.
struct DiscreteMeasure {
  std::vector<Rat> nodes;
  std::vector<Rat> weights;
};
struct JacobiWeight {
  Rat a;
  Rat b;
};
struct RecurrenceMeasure {
  MonicRecurrence rec;
};
using Measure = std::variant<DiscreteMeasure, JacobiWeight, RecurrenceMeasure>;

namespace detail {

inline void validate_discrete(const DiscreteMeasure& m) {
  if (m.nodes.size() != m.weights.size() || m.nodes.empty())
    throw Error("invalid-measure", "discrete measure needs matching nonempty nodes and weights");
  Rat total(0);
  for (const Rat& w : m.weights) {
    if (!(w > 0)) throw Error("invalid-measure", "discrete weights must be positive");
    total += w;
  }
  if (total != 1) throw Error("invalid-measure", "discrete weights must sum to 1");
  for (std::size_t i = 0; i < m.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < m.nodes.size(); ++j)
      if (m.nodes[i] == m.nodes[j]) throw Error("invalid-measure", "discrete nodes must be distinct");
}

}  // namespace detail

/// Moments m_k = (T^k)_{00} of the monic tridiagonal operator, exact.
/// Walks contributing to m_k never exceed index floor(count/2), so the
/// ladder is truncated there without loss.
inline std::vector<Rat> moments_from_monic(const MonicRecurrence& rec, int count) {
  rec.validate();
  if (count < 0) throw Error("invalid-count", "moment count must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(count / 2) + 1;
  if (rec.alpha.size() < dim || rec.beta.size() < dim)
    throw Error("insufficient-prefix", "monic recurrence too short for requested moments");
  std::vector<Rat> v(dim, Rat(0));
  v[0] = 1;
  std::vector<Rat> out{Rat(1)};
  for (int step = 0; step < count; ++step) {
    std::vector<Rat> next(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (v[i] == 0) continue;
      next[i] += rec.alpha[i] * v[i];
      if (i + 1 < dim) next[i + 1] += v[i];
      if (i >= 1) next[i - 1] += rec.beta[i] * v[i];
    }
    v = std::move(next);
    out.push_back(v[0]);
  }
  return out;
}

/// Exact normalized power moments of a measure, m_0 = 1. Jacobi moments
/// use m_{k+1} = ((b-a) m_k + k m_{k-1}) / (a+b+k+2), the integration-by-
/// parts recursion of the weight.
inline std::vector<Rat> measure_moments(const Measure& m, int count) {
  if (count < 0) throw Error("invalid-count", "moment count must be nonnegative");
  if (const auto* d = std::get_if<DiscreteMeasure>(&m)) {
    detail::validate_discrete(*d);
    std::vector<Rat> out;
    std::vector<Rat> pow(d->nodes.size(), Rat(1));
    for (int k = 0; k <= count; ++k) {
      Rat acc(0);
      for (std::size_t i = 0; i < d->nodes.size(); ++i) acc += d->weights[i] * pow[i];
      out.push_back(acc);
      for (std::size_t i = 0; i < d->nodes.size(); ++i) pow[i] *= d->nodes[i];
    }
    return out;
  }
  if (const auto* j = std::get_if<JacobiWeight>(&m)) {
    if (!(j->a > -1) || !(j->b > -1)) throw Error("invalid-measure", "Jacobi weight requires a, b > -1");
    std::vector<Rat> out{Rat(1)};
    for (int k = 0; k < count; ++k) {
      const Rat prev = k >= 1 ? out[static_cast<std::size_t>(k - 1)] : Rat(0);
      out.push_back(((j->b - j->a) * out[static_cast<std::size_t>(k)] + k * prev) /
                    (j->a + j->b + k + 2));
    }
    return out;
  }
  return moments_from_monic(std::get<RecurrenceMeasure>(m).rec, count);
}

/// Monic recurrence of a measure, by closed form where available and by the
/// exact Stieltjes procedure from moments otherwise (discrete measures
/// support depth < node count).
inline MonicRecurrence monic_recurrence(const Measure& m, int count) {
  if (const auto* j = std::get_if<JacobiWeight>(&m)) return jacobi_monic(j->a, j->b, count);
  if (const auto* rm = std::get_if<RecurrenceMeasure>(&m)) {
    if (rm->rec.alpha.size() < static_cast<std::size_t>(count))
      throw Error("insufficient-prefix", "recurrence measure too short");
    return rm->rec;
  }
  const auto& d = std::get<DiscreteMeasure>(m);
  detail::validate_discrete(d);
  if (static_cast<std::size_t>(count) > d.nodes.size())
    throw Error("insufficient-nodes",
                "a discrete measure with k nodes determines at most k recurrence steps");
  // exact Stieltjes procedure over the moment functional
  const auto mom = measure_moments(m, 2 * count);
  const auto inner = [&](const Poly& f, const Poly& g) {
    const Poly prod = f * g;
    Rat acc(0);
    for (int k = 0; k <= prod.degree(); ++k) acc += prod.coeff(k) * mom[static_cast<std::size_t>(k)];
    return acc;
  };
  MonicRecurrence rec;
  rec.beta.push_back(Rat(0));
  Poly prev, cur = Poly::constant(Rat(1));
  Rat norm_prev(0), norm_cur(1);
  for (int k = 0; k < count; ++k) {
    rec.alpha.push_back(inner(cur.shifted_up(1), cur) / norm_cur);
    if (k >= 1) rec.beta.push_back(norm_cur / norm_prev);
    Poly next = cur.shifted_up(1) - cur * rec.alpha.back();
    if (k >= 1) next -= prev * rec.beta.back();
    prev = std::move(cur);
    cur = std::move(next);
    norm_prev = norm_cur;
    if (k + 1 < count) norm_cur = inner(cur, cur);
  }
  rec.validate();
  return rec;
}

/// Monic orthogonal polynomials r~_0..r~_K from their recurrence.
inline std::vector<Poly> monic_polynomials(const MonicRecurrence& rec, int depth) {
  std::vector<Poly> r{Poly::constant(Rat(1))};
  if (depth >= 1) {
    if (rec.alpha.empty()) throw Error("insufficient-prefix", "monic recurrence too short");
    r.push_back(Poly{-rec.alpha[0], Rat(1)});
  }
  for (int k = 1; k < depth; ++k) {
    if (rec.alpha.size() <= static_cast<std::size_t>(k) || rec.beta.size() <= static_cast<std::size_t>(k))
      throw Error("insufficient-prefix", "monic recurrence too short");
    Poly next = r[static_cast<std::size_t>(k)].shifted_up(1) -
                r[static_cast<std::size_t>(k)] * rec.alpha[static_cast<std::size_t>(k)] -
                r[static_cast<std::size_t>(k - 1)] * rec.beta[static_cast<std::size_t>(k)];
    r.push_back(std::move(next));
  }
  return r;
}

/// Orthonormal polynomials in floating point: b_k = alpha_k, a_k =
/// sqrt(beta_{k+1}); square roots force the double path.
inline std::vector<PolyD> orthonormal_polynomials_double(const MonicRecurrence& rec, int depth) {
  std::vector<PolyD> r{PolyD::constant(1.0)};
  std::vector<double> a, b;
  for (std::size_t k = 0; k < rec.alpha.size(); ++k) b.push_back(to_double(rec.alpha[k]));
  for (std::size_t k = 1; k < rec.beta.size(); ++k) a.push_back(std::sqrt(to_double(rec.beta[k])));
  for (int n = 0; n < depth; ++n) {
    if (static_cast<std::size_t>(n) >= a.size() || static_cast<std::size_t>(n) >= b.size())
      throw Error("insufficient-prefix", "monic recurrence too short");
    PolyD next = r[static_cast<std::size_t>(n)].shifted_up(1) -
                 r[static_cast<std::size_t>(n)] * b[static_cast<std::size_t>(n)];
    if (n >= 1) next -= r[static_cast<std::size_t>(n - 1)] * a[static_cast<std::size_t>(n - 1)];
    r.push_back(next * (1.0 / a[static_cast<std::size_t>(n)]));
  }
  return r;
}

/// A^n[p] = lambda^n p + p(0) (c lambda + d) (d^n - lambda^n)/(d - lambda),
/// with the divided-difference factor formed as a polynomial, so no limit
/// at lambda = d is needed; A^0 is the identity.
template <typename T>
Polynomial<T> apply_A_power(const T& c, const T& d, const Polynomial<T>& p, int n) {
  if (n < 0) throw Error("invalid-count", "operator power must be nonnegative");
  if (n == 0) return p;
  Polynomial<T> out = p.shifted_up(n);
  const T p0 = p.eval(T(0));
  if (p0 != T(0)) {
    std::vector<T> geometric(static_cast<std::size_t>(n));
    T power(1);
    for (int i = n - 1; i >= 0; --i) {
      geometric[static_cast<std::size_t>(i)] = power;  // d^{n-1-i}
      power *= d;
    }
    const Polynomial<T> linear{d, c};
    out += (linear * Polynomial<T>(std::move(geometric))) * p0;
  }
  return out;
}

inline Poly apply_A_power(const PerturbationParams& prm, const Poly& p, int n) {
  return apply_A_power(prm.c, prm.d, p, n);
}

/// u(A)[1] = (c+1) u + (c+1) d (u(lambda) - u(d))/(lambda - d) - c u(d);
/// the exact polynomial form of the operator-calculus bracket.
template <typename T>
Polynomial<T> u_of_A_at_one(const T& c, const T& d, const Polynomial<T>& u) {
  Polynomial<T> out = u * (c + T(1));
  out += divided_difference_at(u, d) * ((c + T(1)) * d);
  out -= Polynomial<T>::constant(c * u.eval(d));
  return out;
}

inline Poly u_of_A_at_one(const PerturbationParams& prm, const Poly& u) {
  return u_of_A_at_one(prm.c, prm.d, u);
}

/// p_n = (1/(c+1)) r_n - (d/(c+1)) (r_n(lambda) - r_n(0))/lambda
///       + (c/(c+1)) r_n(0); limits realized as polynomial divided
/// differences.
template <typename T>
Polynomial<T> p_from_r(const T& c, const T& d, const Polynomial<T>& r) {
  Polynomial<T> out = r * (T(1) / (c + T(1)));
  out -= divided_difference_at(r, T(0)) * (d / (c + T(1)));
  out += Polynomial<T>::constant(r.eval(T(0)) * c / (c + T(1)));
  return out;
}

/// Inverse transform r_n = (c+1) p_n + (c+1) d (p_n(lambda) - p_n(d))/(lambda - d) - c p_n(d).
template <typename T>
Polynomial<T> r_from_p(const T& c, const T& d, const Polynomial<T>& p) {
  return u_of_A_at_one(c, d, p);
}

template <typename T>
std::vector<Polynomial<T>> p_from_r(const T& c, const T& d, const std::vector<Polynomial<T>>& r) {
  std::vector<Polynomial<T>> out;
  out.reserve(r.size());
  for (const auto& rn : r) out.push_back(p_from_r(c, d, rn));
  return out;
}

template <typename T>
std::vector<Polynomial<T>> r_from_p(const T& c, const T& d, const std::vector<Polynomial<T>>& p) {
  std::vector<Polynomial<T>> out;
  out.reserve(p.size());
  for (const auto& pn : p) out.push_back(r_from_p(c, d, pn));
  return out;
}

inline std::vector<Poly> p_from_r(const PerturbationParams& prm, const std::vector<Poly>& r) {
  return p_from_r(prm.c, prm.d, r);
}
inline std::vector<Poly> r_from_p(const PerturbationParams& prm, const std::vector<Poly>& p) {
  return r_from_p(prm.c, prm.d, p);
}

/// Residual of the non-standard three-term relation
///   lambda p_n = (p_n(d)/(c+1))(c lambda + d) + a_{n-1} p_{n-1}
///                + b_n p_n + a_n p_{n+1}.
template <typename T>
Polynomial<T> recurrence3_residual(const T& c, const T& d, const std::vector<Polynomial<T>>& p,
                                   const std::vector<T>& a, const std::vector<T>& b, int n) {
  if (n < 0 || p.size() < static_cast<std::size_t>(n) + 2 ||
      a.size() < static_cast<std::size_t>(n) + 1 || b.size() < static_cast<std::size_t>(n) + 1)
    throw Error("index-out-of-range", "entries up to n+1 are required");
  Polynomial<T> acc = p[static_cast<std::size_t>(n)].shifted_up(1);
  acc -= Polynomial<T>{d, c} * (p[static_cast<std::size_t>(n)].eval(d) / (c + T(1)));
  if (n >= 1) acc -= p[static_cast<std::size_t>(n - 1)] * a[static_cast<std::size_t>(n - 1)];
  acc -= p[static_cast<std::size_t>(n)] * b[static_cast<std::size_t>(n)];
  acc -= p[static_cast<std::size_t>(n + 1)] * a[static_cast<std::size_t>(n)];
  return acc;
}

inline Poly recurrence3_residual(const PerturbationParams& prm, const std::vector<Poly>& p,
                                 const std::vector<Rat>& a, const std::vector<Rat>& b, int n) {
  return recurrence3_residual(prm.c, prm.d, p, a, b, n);
}

namespace detail {

template <typename T, typename M>
T contract_moments(const Polynomial<T>& poly, const M& moments) {
  T acc{};
  for (int k = 0; k <= poly.degree(); ++k)
    acc += poly.coeff(k) * moments[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace detail

/// Gram matrix G[n][m] = integral of bracket(p_n) bracket(p_m) dsigma where
/// bracket is the inverse transform r_from_p; off-diagonals vanish exactly
/// for any family transformed from measure-orthogonal input. With monic
/// input the diagonal carries the squared monic norms rather than 1.
inline Matrix<Rat> orthonormality_gram(const PerturbationParams& prm, const std::vector<Rat>& moments,
                                       const std::vector<Poly>& p, int nmax) {
  if (p.size() < static_cast<std::size_t>(nmax) + 1)
    throw Error("insufficient-basis", "p_0..p_nmax required");
  std::vector<Poly> brackets;
  brackets.reserve(static_cast<std::size_t>(nmax) + 1);
  int maxdeg = 0;
  for (int n = 0; n <= nmax; ++n) {
    brackets.push_back(r_from_p(prm.c, prm.d, p[static_cast<std::size_t>(n)]));
    maxdeg = std::max(maxdeg, brackets.back().degree());
  }
  if (moments.size() < static_cast<std::size_t>(2 * maxdeg) + 1)
    throw Error("insufficient-moments", "moments to degree 2*nmax are required");
  Matrix<Rat> out(static_cast<std::size_t>(nmax) + 1, static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n)
    for (int m = n; m <= nmax; ++m) {
      const Rat v = detail::contract_moments(brackets[static_cast<std::size_t>(n)] *
                                                 brackets[static_cast<std::size_t>(m)],
                                             moments);
      out.at(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) = v;
      out.at(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) = v;
    }
  return out;
}

/// Defect matrix G - I in floating point for orthonormal input.
inline Matrix<double> orthonormality_defect_double(double c, double d,
                                                   const std::vector<double>& moments,
                                                   const std::vector<PolyD>& p, int nmax) {
  Matrix<double> out(static_cast<std::size_t>(nmax) + 1, static_cast<std::size_t>(nmax) + 1, 0.0);
  std::vector<PolyD> brackets;
  for (int n = 0; n <= nmax; ++n)
    brackets.push_back(r_from_p(c, d, p[static_cast<std::size_t>(n)]));
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= nmax; ++m) {
      const double v = detail::contract_moments(brackets[static_cast<std::size_t>(n)] *
                                                    brackets[static_cast<std::size_t>(m)],
                                                moments);
      out.at(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) = v - (n == m ? 1.0 : 0.0);
    }
  return out;
}

/// The spectral function of the perturbation-built pencil, computed from
/// the measure side: S(u, v) = integral of u(A)[1] * v(A)[1] dsigma with
/// polynomial integrands, contracted against exact moments.
inline MomentTable spectral_table_from_perturbation(const PerturbationParams& prm,
                                                    const std::vector<Rat>& moments, int m) {
  std::vector<Poly> brackets;
  for (int k = 0; k <= m; ++k)
    brackets.push_back(u_of_A_at_one(prm, Poly::monomial(k)));
  if (moments.size() < static_cast<std::size_t>(2 * m) + 1)
    throw Error("insufficient-moments", "moments to degree 2m are required");
  return moment_table_from_pairing(
      [&](int i, int j) {
        return detail::contract_moments(brackets[static_cast<std::size_t>(i)] *
                                            brackets[static_cast<std::size_t>(j)],
                                        moments);
      },
      m);
}

namespace detail {

template <typename T>
PencilData<T> pencil_from_orthonormal(const std::vector<T>& a, const std::vector<T>& b, const T& c,
                                      const T& d, const T& m1, const T& sqrt_delta1) {
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
  out.alpha_const = T(1) / ((c + T(1)) * sqrt_delta1);
  out.beta_const = -((c + T(1)) * m1 + d) / ((c + T(1)) * sqrt_delta1);
  return out;
}

}  // namespace detail

/// Numeric pencil of the perturbation family: J3 is the Jacobi matrix of
/// the measure, J5 = J3^2, and the seed constants come from A[1] =
/// (1+c) lambda + d together with the first Hankel data (m_1, Delta_1).
inline PencilF build_pencil_from_perturbation(const PerturbationParams& prm, const Measure& measure,
                                              int depth) {
  const int need = std::max(depth + 1, 2);
  const MonicRecurrence rec = monic_recurrence(measure, need);
  std::vector<double> a, b;
  for (std::size_t k = 0; k + 1 < rec.beta.size(); ++k) a.push_back(std::sqrt(to_double(rec.beta[k + 1])));
  for (std::size_t k = 0; k < rec.alpha.size(); ++k) b.push_back(to_double(rec.alpha[k]));
  return detail::pencil_from_orthonormal(a, b, to_double(prm.c), to_double(prm.d),
                                         to_double(rec.alpha[0]), std::sqrt(to_double(rec.beta[1])));
}

/// Exact pencil of the perturbation family, available when every
/// orthonormal coefficient sqrt(beta_k) is rational; otherwise throws
/// "irrational-orthonormal".
inline Pencil build_pencil_exact(const PerturbationParams& prm, const MonicRecurrence& rec) {
  std::vector<Rat> a, b;
  for (std::size_t k = 1; k < rec.beta.size(); ++k) {
    const auto root = exact_sqrt(rec.beta[k]);
    if (!root)
      throw Error("irrational-orthonormal",
                  "monic beta_" + std::to_string(k) + " is not a perfect rational square");
    a.push_back(*root);
  }
  b = rec.alpha;
  if (a.empty() || b.empty()) throw Error("insufficient-prefix", "recurrence too short");
  return detail::pencil_from_orthonormal(a, b, prm.c, prm.d, b[0], a[0]);
}

}  // namespace pencillab

#endif
