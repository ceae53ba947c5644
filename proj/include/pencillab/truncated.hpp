#ifndef PENCILLAB_TRUNCATED_HPP
#define PENCILLAB_TRUNCATED_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "pencillab/pencil.hpp"
#include "pencillab/polynomial_matrix.hpp"
#include "pencillab/roots.hpp"

namespace pencillab {

/// Characteristic polynomial D_j = det(J5_trunc - lambda * J3_trunc) of the
/// j x j truncation; D_0 = 1.
inline Poly char_poly(const Pencil& pen, int j) {
  if (j < 0) throw Error("index-out-of-range", "truncation size must be nonnegative");
  if (j == 0) return Poly::constant(Rat(1));
  if (pen.alpha5.size() < static_cast<std::size_t>(j) || pen.b.size() < static_cast<std::size_t>(j) ||
      (j >= 2 && (pen.beta5.size() < static_cast<std::size_t>(j - 1) ||
                  pen.a.size() < static_cast<std::size_t>(j - 1))) ||
      (j >= 3 && pen.gamma.size() < static_cast<std::size_t>(j - 2)))
    throw Error("insufficient-prefix", "pencil prefixes too short for truncation size");
  PolyMatrix<Rat> m(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) {
    m.at(i, i) = Poly{pen.alpha5[static_cast<std::size_t>(i)], -pen.b[static_cast<std::size_t>(i)]};
    if (i + 1 < j) {
      const Poly off{pen.beta5[static_cast<std::size_t>(i)], -pen.a[static_cast<std::size_t>(i)]};
      m.at(i, i + 1) = off;
      m.at(i + 1, i) = off;
    }
    if (i + 2 < j) {
      const Poly off2 = Poly::constant(pen.gamma[static_cast<std::size_t>(i)]);
      m.at(i, i + 2) = off2;
      m.at(i + 2, i) = off2;
    }
  }
  return polymat_det(m);
}

struct FactorizationResult {
  Rat c_j;
  bool ok = false;
  Poly wronskian;  // p_j u_{j+1} - p_{j+1} u_j
  Poly d_j;
};

/// Determines c_j by matching the coefficients at the wronskian's top
/// degree, then verifies D_j = c_j (p_j u_{j+1} - p_{j+1} u_j) exactly.
inline FactorizationResult factorization_check(const Pencil& pen, int j) {
  if (j < 1) throw Error("index-out-of-range", "factorization defined for j >= 1");
  const auto p = associated_polynomials(pen, j + 1);
  const auto u = shifted_solutions(pen, 1, j + 1);
  FactorizationResult out;
  out.wronskian = p[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j + 1)] -
                  p[static_cast<std::size_t>(j + 1)] * u[static_cast<std::size_t>(j)];
  out.d_j = char_poly(pen, j);
  if (out.wronskian.is_zero()) {
    if (out.d_j.is_zero()) throw Error("singular-pencil", "D_j vanishes identically");
    throw Error("zero-wronskian", "p_j u_{j+1} - p_{j+1} u_j vanishes identically");
  }
  out.c_j = out.d_j.coeff(out.wronskian.degree()) / out.wronskian.leading();
  out.ok = (out.wronskian * out.c_j == out.d_j);
  return out;
}

struct EigenPair {
  std::complex<double> value;
  int multiplicity = 1;
  /// Basis of the eigenspace found through the span representation
  /// x = c1 (p_0..p_{j-1}) + c2 (u_0..u_{j-1}); one or two vectors.
  std::vector<std::vector<std::complex<double>>> vectors;
  double residual = 0.0;  // max over vectors of |(J5 - lambda J3)x| / |x|
};

struct TruncatedSpectrum {
  int j = 0;
  Poly charpoly;
  std::vector<EigenPair> pairs;
};

namespace detail {

inline double vec_norm(const std::vector<std::complex<double>>& v) {
  double acc = 0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

}  // namespace detail

/// Spectrum of the truncated pencil: roots of D_j clustered at 1e-9, with
/// eigenvectors from the kernel of the 2x2 matrix
/// [[p_j, u_j], [p_{j+1}, u_{j+1}]](lambda_0).
inline TruncatedSpectrum pencil_eigs(const Pencil& pen, int j) {
  if (j < 1) throw Error("index-out-of-range", "spectrum defined for j >= 1");
  TruncatedSpectrum out;
  out.j = j;
  out.charpoly = char_poly(pen, j);
  if (out.charpoly.is_zero()) throw Error("singular-pencil", "D_j vanishes identically");
  if (out.charpoly.degree() == 0) return out;  // constant-charpoly: empty spectrum

  const auto p = associated_polynomials(pen, j + 1);
  const auto u = shifted_solutions(pen, 1, j + 1);
  const auto j3 = truncated_j3(pen, static_cast<std::size_t>(j));
  const auto j5 = truncated_j5(pen, static_cast<std::size_t>(j));

  const auto clusters = cluster_roots(roots_float(out.charpoly), 1e-9);
  for (const auto& cluster : clusters) {
    EigenPair pair;
    pair.value = cluster.value;
    pair.multiplicity = cluster.multiplicity;

    const std::complex<double> pj = eval_complex(p[static_cast<std::size_t>(j)], cluster.value);
    const std::complex<double> uj = eval_complex(u[static_cast<std::size_t>(j)], cluster.value);
    const std::complex<double> pj1 = eval_complex(p[static_cast<std::size_t>(j + 1)], cluster.value);
    const std::complex<double> uj1 = eval_complex(u[static_cast<std::size_t>(j + 1)], cluster.value);

    const auto build = [&](std::complex<double> c1, std::complex<double> c2)
        -> std::pair<std::vector<std::complex<double>>, double> {
      std::vector<std::complex<double>> x(static_cast<std::size_t>(j));
      for (int i = 0; i < j; ++i)
        x[static_cast<std::size_t>(i)] =
            c1 * eval_complex(p[static_cast<std::size_t>(i)], cluster.value) +
            c2 * eval_complex(u[static_cast<std::size_t>(i)], cluster.value);
      const double norm = detail::vec_norm(x);
      if (norm <= 1e-14) return {std::move(x), 1.0};
      std::vector<std::complex<double>> res(static_cast<std::size_t>(j), {0.0, 0.0});
      for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c) {
          const std::complex<double> entry =
              to_double(j5.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) -
              cluster.value *
                  to_double(j3.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
          res[static_cast<std::size_t>(r)] += entry * x[static_cast<std::size_t>(c)];
        }
      return {std::move(x), detail::vec_norm(res) / norm};
    };

    // kernel of [[pj, uj], [pj1, uj1]]: the generic root has a rank-one
    // matrix (one kernel direction); a multiple root may carry a
    // two-dimensional kernel. Candidates are validated by residual.
    const double row0 = std::abs(pj) + std::abs(uj);
    const double row1 = std::abs(pj1) + std::abs(uj1);
    std::vector<std::pair<std::complex<double>, std::complex<double>>> kernel;
    if (cluster.multiplicity >= 2) {
      kernel = {{1.0, 0.0}, {0.0, 1.0}};
    } else if (row0 >= row1) {
      kernel = {{uj, -pj}};
    } else {
      kernel = {{uj1, -pj1}};
    }

    for (const auto& [c1, c2] : kernel) {
      auto [x, residual] = build(c1, c2);
      if (cluster.multiplicity >= 2 && residual > 1e-8) continue;
      pair.residual = std::max(pair.residual, residual);
      pair.vectors.push_back(std::move(x));
    }
    if (pair.vectors.empty()) {
      // multiple root with a one-dimensional kernel: fall back to the
      // dominant-row kernel direction
      auto [x, residual] = build(row0 >= row1 ? uj : uj1, row0 >= row1 ? -pj : -pj1);
      pair.residual = residual;
      pair.vectors.push_back(std::move(x));
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

/// Bilinear (not sesquilinear) pairing [J3 x, y]_C = sum_i (J3 x)_i y_i.
inline std::complex<double> bilinear_form_C(const std::vector<std::complex<double>>& x,
                                            const std::vector<std::complex<double>>& y,
                                            const Matrix<Rat>& j3trunc) {
  if (x.size() != j3trunc.cols() || y.size() != j3trunc.rows())
    throw Error("dimension-mismatch", "vector lengths must match the truncation size");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::complex<double> row{0.0, 0.0};
    for (std::size_t k = 0; k < x.size(); ++k) row += to_double(j3trunc.at(i, k)) * x[k];
    acc += row * y[i];
  }
  return acc;
}

/// Ordinary sesquilinear pairing (J3 x, y) = sum_i (J3 x)_i conj(y_i).
inline std::complex<double> sesquilinear_form(const std::vector<std::complex<double>>& x,
                                              const std::vector<std::complex<double>>& y,
                                              const Matrix<Rat>& j3trunc) {
  if (x.size() != j3trunc.cols() || y.size() != j3trunc.rows())
    throw Error("dimension-mismatch", "vector lengths must match the truncation size");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::complex<double> row{0.0, 0.0};
    for (std::size_t k = 0; k < x.size(); ++k) row += to_double(j3trunc.at(i, k)) * x[k];
    acc += row * std::conj(y[i]);
  }
  return acc;
}

struct PairingEntry {
  std::size_t first = 0, second = 0;  // indices into spectrum.pairs
  std::complex<double> bilinear;
  std::complex<double> sesquilinear;
  bool bilinear_zero = false;       // expected for distinct eigenvalues
  bool sesquilinear_applicable = false;  // lambda' != conj(lambda'')
  bool sesquilinear_zero = false;
};

struct OrthogonalityReport {
  std::vector<PairingEntry> pairs;
  bool j3_positive_definite = false;
  double max_imag = 0.0;  // largest |Im lambda| over the spectrum
  bool all_passed = true;
  double tolerance = 1e-8;
};

/// Checks [J3 x', x'']_C = 0 across distinct eigenvalues and the
/// sesquilinear vanishing whenever lambda' != conj(lambda''); for positive
/// definite J3 truncations all eigenvalues must be real.
inline OrthogonalityReport orthogonality_report(const TruncatedSpectrum& spec, const Pencil& pen,
                                                double tol = 1e-8) {
  OrthogonalityReport report;
  report.tolerance = tol;
  const auto j3 = truncated_j3(pen, static_cast<std::size_t>(spec.j));
  report.j3_positive_definite = is_positive_definite(j3);
  for (const auto& pair : spec.pairs)
    report.max_imag = std::max(report.max_imag, std::abs(pair.value.imag()));
  if (report.j3_positive_definite && report.max_imag > 1e-9) report.all_passed = false;

  for (std::size_t ia = 0; ia < spec.pairs.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < spec.pairs.size(); ++ib) {
      const auto& pa = spec.pairs[ia];
      const auto& pb = spec.pairs[ib];
      for (const auto& xa : pa.vectors) {
        for (const auto& xb : pb.vectors) {
          PairingEntry entry;
          entry.first = ia;
          entry.second = ib;
          const double na = detail::vec_norm(xa), nb = detail::vec_norm(xb);
          entry.bilinear = bilinear_form_C(xa, xb, j3) / (na * nb);
          entry.sesquilinear = sesquilinear_form(xa, xb, j3) / (na * nb);
          entry.bilinear_zero = std::abs(entry.bilinear) <= tol;
          entry.sesquilinear_applicable = std::abs(pa.value - std::conj(pb.value)) > 1e-9;
          entry.sesquilinear_zero = std::abs(entry.sesquilinear) <= tol;
          if (!entry.bilinear_zero) report.all_passed = false;
          if (entry.sesquilinear_applicable && !entry.sesquilinear_zero) report.all_passed = false;
          report.pairs.push_back(entry);
        }
      }
    }
  }
  return report;
}

}  // namespace pencillab

#endif
