#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pencillab/matrix.hpp"
#include "pencillab/polynomial_matrix.hpp"

using namespace pencillab;

namespace {

// direct cofactor expansion, the independent oracle for small sizes
Rat det_cofactor(const Matrix<Rat>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  if (n == 1) return m.at(0, 0);
  Rat acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rat> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Rat term = m.at(0, j) * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

Matrix<Rat> random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix<Rat> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("fraction-free determinant vs cofactor oracle") {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, n);
      CHECK(det(m) == det_cofactor(m));
    }
  }
  CHECK(det(Matrix<Rat>::identity(6)) == 1);
}

TEST_CASE("exact linear solve") {
  SECTION("identity") {
    const auto id = Matrix<Rat>::identity(3);
    const std::vector<Rat> b{Rat(1), Rat(2), Rat(3)};
    CHECK(solve_linear_exact(id, b) == b);
  }
  SECTION("diagonal") {
    Matrix<Rat> m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 4;
    const auto x = solve_linear_exact(m, {Rat(1), Rat(1)});
    CHECK(x == std::vector<Rat>{Rat(1, 2), Rat(1, 4)});
  }
  SECTION("singular matrix is reported") {
    Matrix<Rat> m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 2;
    CHECK_THROWS_MATCHES(solve_linear_exact(m, {Rat(1), Rat(1)}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == "singular-system"; }));
  }
  SECTION("residual A x = b is exact on random systems") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(rng, 4);
      if (det(m) == 0) continue;
      std::vector<Rat> b(4);
      std::uniform_int_distribution<int> num(-9, 9);
      for (auto& v : b) v = Rat(num(rng), 3);
      const auto x = solve_linear_exact(m, b);
      CHECK(m.apply(x) == b);
    }
  }
}

TEST_CASE("polynomial matrix determinant") {
  SECTION("1x1") {
    PolyMatrix<Rat> m(1, 1);
    m.at(0, 0) = Poly::monomial(1);
    CHECK(polymat_det(m) == Poly::monomial(1));
  }
  SECTION("2x2 [[x,1],[1,x]]") {
    PolyMatrix<Rat> m(2, 2);
    m.at(0, 0) = Poly::monomial(1);
    m.at(0, 1) = Poly::constant(Rat(1));
    m.at(1, 0) = Poly::constant(Rat(1));
    m.at(1, 1) = Poly::monomial(1);
    CHECK(polymat_det(m) == Poly{Rat(-1), Rat(0), Rat(1)});
  }
  SECTION("degree-0 matrices agree with the scalar determinant") {
    std::mt19937_64 rng(44);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto m = random_matrix(rng, n);
      PolyMatrix<Rat> pm(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pm.at(i, j) = Poly::constant(m.at(i, j));
      CHECK(polymat_det(pm) == Poly::constant(det(m)));
    }
  }
  SECTION("size cap") {
    PolyMatrix<Rat> big(13, 13);
    CHECK_THROWS_AS(polymat_det(big), Error);
  }
  SECTION("non-square") {
    PolyMatrix<Rat> rect(2, 3);
    CHECK_THROWS_AS(polymat_det(rect), Error);
  }
}

TEST_CASE("positive definiteness by exact minors") {
  Matrix<Rat> m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = Rat(1, 2);
  m.at(1, 0) = Rat(1, 2);
  m.at(1, 1) = 1;
  CHECK(is_positive_definite(m));
  m.at(1, 1) = Rat(1, 4);  // det = 1/4 - 1/4 = 0
  CHECK_FALSE(is_positive_definite(m));
}
