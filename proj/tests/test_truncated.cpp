#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pencillab/truncated.hpp"

using namespace pencillab;

namespace {

Pencil chebyshev_like(int len = 16) {
  return degenerate_from_jacobi(std::vector<Rat>(len, Rat(1)), std::vector<Rat>(len, Rat(0)));
}

Pencil ones_pencil(int len = 16) {
  return degenerate_from_jacobi(std::vector<Rat>(len, Rat(1)), std::vector<Rat>(len, Rat(1)));
}

Pencil example41(int len = 16) {
  Pencil p = degenerate_from_jacobi(std::vector<Rat>(len, Rat(1, 2)), std::vector<Rat>(len, Rat(1)));
  p.alpha_const = 2;
  p.beta_const = -4;
  return p;
}

// indefinite J3 truncation at j = 2; the pencil eigenvalues there are the
// complex pair (3 +- i sqrt 7)/4
Pencil indefinite_pencil(int len = 12) {
  Pencil p;
  p.a.assign(len, Rat(1));
  p.b.assign(len, Rat(0));
  p.b[0] = 1;
  p.b[1] = -1;
  p.alpha5.assign(len, Rat(1));
  p.alpha5[1] = -2;
  p.beta5.assign(len, Rat(0));
  p.gamma.assign(len, Rat(1));
  p.alpha_const = 1;
  p.beta_const = 0;
  return p;
}

}  // namespace

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(chebyshev_like(), 0) == Poly::constant(Rat(1)));
  // alpha5_0 - lambda b_0 = 2 - lambda for the all-ones pencil
  CHECK(char_poly(ones_pencil(), 1) == Poly{Rat(2), Rat(-1)});
  // b_0 = 0 drops the degree: D_1 is the constant 1
  CHECK(char_poly(chebyshev_like(), 1) == Poly::constant(Rat(1)));
  // hand-computed 2x2 determinant for the example pencil
  CHECK(char_poly(example41(), 2) == Poly{Rat(7, 8), Rat(-7, 4), Rat(3, 4)});
  CHECK(char_poly(indefinite_pencil(), 2) == Poly{Rat(-2), Rat(3), Rat(-2)});
}

TEST_CASE("factorization through p and u") {
  SECTION("hand-checked j = 1 for the all-ones pencil") {
    const auto res = factorization_check(ones_pencil(), 1);
    CHECK(res.ok);
    CHECK(res.d_j == Poly{Rat(2), Rat(-1)});
    CHECK(res.c_j == 1);  // wronskian equals D_1 here
  }
  SECTION("identity holds for j = 1..8 on several pencils") {
    for (const auto& pen : {chebyshev_like(), ones_pencil(), example41(), indefinite_pencil()}) {
      for (int j = 1; j <= 8; ++j) {
        const auto res = factorization_check(pen, j);
        CHECK(res.ok);
        CHECK(res.c_j != 0);
      }
    }
  }
  SECTION("computed constants for the example pencil are 4^{-j}") {
    // gamma entries are all 1/4; the wronskian scaling follows suit
    for (int j = 1; j <= 5; ++j) {
      Rat expected(1);
      for (int i = 0; i < j; ++i) expected /= 4;
      CHECK(factorization_check(example41(), j).c_j == expected);
    }
  }
}

TEST_CASE("truncated spectra") {
  SECTION("1x1 with eigenvalue 2") {
    const auto spec = pencil_eigs(ones_pencil(), 1);
    REQUIRE(spec.pairs.size() == 1);
    CHECK(std::abs(spec.pairs[0].value - std::complex<double>(2, 0)) < 1e-12);
    REQUIRE(spec.pairs[0].vectors.size() == 1);
    CHECK(spec.pairs[0].residual < 1e-12);
  }
  SECTION("constant charpoly yields an empty spectrum") {
    const auto spec = pencil_eigs(chebyshev_like(), 1);
    CHECK(spec.pairs.empty());
  }
  SECTION("complex pair on the indefinite pencil") {
    const auto spec = pencil_eigs(indefinite_pencil(), 2);
    REQUIRE(spec.pairs.size() == 2);
    const double s7 = std::sqrt(7.0) / 4.0;
    CHECK(std::abs(spec.pairs[0].value - std::complex<double>(0.75, -s7)) < 1e-10);
    CHECK(std::abs(spec.pairs[1].value - std::complex<double>(0.75, s7)) < 1e-10);
    for (const auto& pair : spec.pairs) CHECK(pair.residual <= 1e-8);
  }
  SECTION("residuals stay below 1e-8 for j <= 8") {
    for (const auto& pen : {chebyshev_like(), ones_pencil(), example41(), indefinite_pencil()}) {
      for (int j = 1; j <= 8; ++j) {
        const auto spec = pencil_eigs(pen, j);
        for (const auto& pair : spec.pairs) {
          CHECK(pair.residual <= 1e-8);
          CHECK(!pair.vectors.empty());
          CHECK(pair.vectors.size() <= 2);  // eigenspaces are at most 2-dim
        }
      }
    }
  }
  SECTION("roots of the factorized form agree with the charpoly roots") {
    for (int j = 2; j <= 6; ++j) {
      const auto pen = ones_pencil();
      const auto spec = pencil_eigs(pen, j);
      const auto fac = factorization_check(pen, j);
      const auto alt = roots_float(fac.wronskian * fac.c_j);
      // D_j and c_j * wronskian are identical polynomials; the two float
      // paths must agree closely
      const auto direct = roots_float(spec.charpoly);
      REQUIRE(alt.size() == direct.size());
      for (std::size_t i = 0; i < alt.size(); ++i) CHECK(std::abs(alt[i] - direct[i]) < 1e-7);
    }
  }
}

TEST_CASE("bilinear and sesquilinear pairings") {
  SECTION("1x1 bilinear form is the weighted product") {
    Matrix<Rat> j3(1, 1);
    j3.at(0, 0) = Rat(5, 2);
    const std::vector<std::complex<double>> e0{{1.0, 0.0}};
    CHECK(std::abs(bilinear_form_C(e0, e0, j3) - std::complex<double>(2.5, 0)) < 1e-15);
  }
  SECTION("real vectors reduce to the real weighted inner product") {
    Matrix<Rat> j3(2, 2);
    j3.at(0, 0) = 1;
    j3.at(0, 1) = Rat(1, 2);
    j3.at(1, 0) = Rat(1, 2);
    j3.at(1, 1) = 1;
    const std::vector<std::complex<double>> x{{1.0, 0.0}, {2.0, 0.0}};
    const std::vector<std::complex<double>> y{{-1.0, 0.0}, {3.0, 0.0}};
    const auto b = bilinear_form_C(x, y, j3);
    const auto s = sesquilinear_form(x, y, j3);
    CHECK(std::abs(b - s) < 1e-15);
    CHECK(b.real() == Catch::Approx(-1.0 * (1.0 + 1.0) + 3.0 * (0.5 + 2.0)));
  }
  SECTION("dimension mismatch") {
    Matrix<Rat> j3(2, 2);
    const std::vector<std::complex<double>> x{{1.0, 0.0}};
    CHECK_THROWS_AS(bilinear_form_C(x, x, j3), Error);
  }
}

TEST_CASE("orthogonality report") {
  SECTION("positive definite truncations have real spectra") {
    for (const auto& pen : {ones_pencil(), example41()}) {
      for (int j = 1; j <= 8; ++j) {
        const auto spec = pencil_eigs(pen, j);
        const auto rep = orthogonality_report(spec, pen);
        CHECK(rep.j3_positive_definite);
        CHECK(rep.max_imag <= 1e-9);
        CHECK(rep.all_passed);
        for (const auto& entry : rep.pairs) CHECK(entry.bilinear_zero);
      }
    }
  }
  SECTION("complex pair: bilinear vanishes, sesquilinear does not apply") {
    const auto pen = indefinite_pencil();
    const auto spec = pencil_eigs(pen, 2);
    const auto rep = orthogonality_report(spec, pen);
    CHECK_FALSE(rep.j3_positive_definite);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].bilinear_zero);
    // the two eigenvalues are conjugates: lambda' == conj(lambda''), so the
    // sesquilinear pairing carries no constraint and is indeed nonzero
    CHECK_FALSE(rep.pairs[0].sesquilinear_applicable);
    CHECK(std::abs(rep.pairs[0].sesquilinear) > 1e-3);
    CHECK(rep.all_passed);
  }
  SECTION("single eigenvalue gives an empty pair report") {
    const auto rep = orthogonality_report(pencil_eigs(ones_pencil(), 1), ones_pencil());
    CHECK(rep.pairs.empty());
  }
}
