#ifndef PENCILLAB_ROOTS_HPP
#define PENCILLAB_ROOTS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pencillab/polynomial.hpp"

namespace pencillab {

namespace detail {

inline double snap(double v, double grid) { return std::round(v / grid) * grid; }

}  // namespace detail

/// All complex roots (with multiplicity) of a degree >= 1 polynomial via
/// companion-matrix eigenvalues in floating point. Ordering is
/// lexicographic by (re, im) after snapping to a 1e-12 grid, so output is
/// deterministic.
inline std::vector<std::complex<double>> roots_float(const Polynomial<double>& p) {
  const int n = p.degree();
  if (n < 1) throw Error("undefined-roots", "roots are undefined for constant or zero polynomials");

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.coeff(n);
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) companion(i + 1, i) = 1.0;
    companion(i, n - 1) = -p.coeff(i) / lead;
  }
  const Eigen::VectorXcd eigs = companion.eigenvalues();

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = eigs(i);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    const double ar = detail::snap(a.real(), 1e-12), br = detail::snap(b.real(), 1e-12);
    if (ar != br) return ar < br;
    return detail::snap(a.imag(), 1e-12) < detail::snap(b.imag(), 1e-12);
  });
  for (const auto& r : roots) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error("nonfinite-roots", "companion eigenvalue solve returned a non-finite value");
  }
  return roots;
}

inline std::vector<std::complex<double>> roots_float(const Poly& p) {
  return roots_float(to_double_poly(p));
}

struct RootCluster {
  std::complex<double> value;  // cluster mean
  int multiplicity = 0;
};

/// Groups a sorted root list into clusters of pairwise distance <= tol.
inline std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                              double tol) {
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::complex<double> sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) <= tol) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

}  // namespace pencillab

#endif
