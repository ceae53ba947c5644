#ifndef PENCILLAB_BANDED_HPP
#define PENCILLAB_BANDED_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "pencillab/perturbation.hpp"
#include "pencillab/polynomial.hpp"
#include "pencillab/spectral.hpp"

namespace pencillab {

/// Coefficient extraction by residue class:
/// R_{N,m}(p)(t) = sum_n p_{nN+m} t^n.
template <typename T>
Polynomial<T> sieve(const Polynomial<T>& p, int N, int m) {
  if (N < 1) throw Error("invalid-count", "sieve order must be positive");
  if (m < 0 || m >= N) throw Error("residue-out-of-range", "residue must satisfy 0 <= m < N");
  std::vector<T> out;
  for (int k = m; k <= p.degree(); k += N) out.push_back(p.coeff(k));
  return Polynomial<T>(std::move(out));
}

/// Block of the matrix orthogonal polynomial: row i, column m holds
/// R_{N,m}(p_{nN+i}).
template <typename T>
Matrix<Polynomial<T>> assemble_block(const std::vector<Polynomial<T>>& p, int N, int n) {
  if (N < 1) throw Error("invalid-count", "block order must be positive");
  if (p.size() < static_cast<std::size_t>(n * N + N))
    throw Error("insufficient-basis", "polynomials up to index nN+N-1 are required");
  Matrix<Polynomial<T>> out(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    for (int m = 0; m < N; ++m)
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(m)) =
          sieve(p[static_cast<std::size_t>(n * N + i)], N, m);
  return out;
}

struct BandFit {
  int N = 1;
  /// xi[k][i] = S(lambda^N p_k, p_i) for 0 <= i <= k+N.
  std::vector<std::vector<Rat>> xi;
  bool banded = true;
  /// First (k, i) with i < k-N and xi[k][i] != 0, when not banded.
  std::optional<std::pair<int, int>> violation;
};

/// Expands lambda^N p_k in the p-basis through S. The family satisfies the
/// (2N+1)-diagonal recurrence exactly when every coefficient below the
/// band vanishes.
inline BandFit band_fit(const std::vector<Poly>& p, const MomentTable& table, int N) {
  if (N < 1) throw Error("invalid-count", "band order must be positive");
  BandFit out;
  out.N = N;
  const int kmax = static_cast<int>(p.size()) - 1 - N;
  if (kmax < 0) throw Error("insufficient-basis", "need p up to index N");
  for (int k = 0; k <= kmax; ++k) {
    if (table.size() < k + N)
      throw Error("insufficient-table", "moment table too small for k+N");
    const Poly shifted = p[static_cast<std::size_t>(k)].shifted_up(N);
    std::vector<Rat> row;
    for (int i = 0; i <= k + N; ++i)
      row.push_back(table.pair(shifted, p[static_cast<std::size_t>(i)]));
    for (int i = 0; i < k - N; ++i) {
      if (row[static_cast<std::size_t>(i)] != 0) {
        out.banded = false;
        if (!out.violation) out.violation = {k, i};
      }
    }
    out.xi.push_back(std::move(row));
  }
  return out;
}

struct SymmetryWitness {
  int degree_w = 0, degree_g = 0;  // monomial degrees of the witnessing pair
  Rat defect;
};

struct FastPathWitness {
  int m = 0;         // index of the orthogonal polynomial paired with phi
  Poly phi;          // (c lambda + d)(d^N - lambda^N)/(d - lambda)
  Rat defect;        // <A^N phi, r~_m> - <phi, A^N r~_m>
};

struct SymmetryReport {
  int N = 1;
  Rat max_defect;  // max |defect| over the monomial grid
  std::optional<SymmetryWitness> witness;
  bool symmetric_on_grid = true;  // grid evidence, not a proof of symmetry
  std::optional<FastPathWitness> fast_path;
};

/// Tests symmetry of A^N in L^2(sigma) on the monomial grid deg <= M by
/// exact moment contraction, preceded by the direct refutation pair
/// (phi, r~_m) with r~_m(0) != 0, m > N, which witnesses non-symmetry
/// whenever the perturbation is genuinely present.
inline SymmetryReport symmetry_defect(const PerturbationParams& prm, const Measure& measure, int N,
                                      int M) {
  if (N < 1) throw Error("invalid-count", "operator power must be positive");
  if (M < 1) throw Error("invalid-count", "grid degree cap must be positive");
  const auto moments = measure_moments(measure, std::max(2 * M + N + 1, 3 * N + 3));
  const auto inner = [&](const Poly& f, const Poly& g) {
    const Poly prod = f * g;
    Rat acc(0);
    for (int k = 0; k <= prod.degree(); ++k) {
      if (static_cast<std::size_t>(k) >= moments.size())
        throw Error("insufficient-moments", "moment list exhausted");
      acc += prod.coeff(k) * moments[static_cast<std::size_t>(k)];
    }
    return acc;
  };
  SymmetryReport out;
  out.N = N;
  out.max_defect = 0;

  std::vector<Poly> monomials, images;
  for (int k = 0; k <= M; ++k) {
    monomials.push_back(Poly::monomial(k));
    images.push_back(apply_A_power(prm, monomials.back(), N));
  }
  for (int i = 0; i <= M; ++i)
    for (int j = i + 1; j <= M; ++j) {
      const Rat defect = inner(images[static_cast<std::size_t>(i)], monomials[static_cast<std::size_t>(j)]) -
                         inner(monomials[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      if (abs(defect) > abs(out.max_defect)) {
        out.max_defect = defect;
        out.witness = SymmetryWitness{i, j, defect};
      }
    }
  out.symmetric_on_grid = out.max_defect == 0;

  // direct witness: phi = A^N[1] - lambda^N paired against the first
  // orthogonal polynomial r~_m, m > N, with r~_m(0) != 0 (among m = N+1,
  // N+2 at least one qualifies by the three-term recurrence)
  const Poly phi = apply_A_power(prm, Poly::constant(Rat(1)), N) - Poly::monomial(N);
  if (!phi.is_zero()) {
    const auto rec = monic_recurrence(measure, N + 3);
    const auto r = monic_polynomials(rec, N + 2);
    for (int m = N + 1; m <= N + 2; ++m) {
      const Poly& rm = r[static_cast<std::size_t>(m)];
      if (rm.eval(Rat(0)) == 0) continue;
      const Rat defect =
          inner(apply_A_power(prm, phi, N), rm) - inner(phi, apply_A_power(prm, rm, N));
      if (defect != 0) {
        out.fast_path = FastPathWitness{m, phi, defect};
        break;
      }
    }
  }
  return out;
}

}  // namespace pencillab

#endif
