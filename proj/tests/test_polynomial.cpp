#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pencillab/polynomial.hpp"

using namespace pencillab;

namespace {

Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rat(num(rng), den(rng));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int d = deg(rng);
  std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
  for (auto& c : coeffs) c = random_rat(rng);
  return Poly(std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial normalization and degree") {
  const Poly p{Rat(1), Rat(2), Rat(0), Rat(0)};
  CHECK(p.degree() == 1);
  CHECK(Poly{}.is_zero());
  CHECK(Poly{Rat(0)}.is_zero());
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly::monomial(3).degree() == 3);
  CHECK((Poly{Rat(1), Rat(1)} - Poly{Rat(1), Rat(1)}).is_zero());
}

TEST_CASE("horner evaluation") {
  // lambda^2 - 3 lambda + 11/4 at 2
  const Poly p{Rat(11, 4), Rat(-3), Rat(1)};
  CHECK(p.eval(Rat(2)) == Rat(3, 4));
  // zero polynomial anywhere
  CHECK(Poly{}.eval(Rat(5)) == Rat(0));
  // 2 lambda - 4 vanishes at b_0 + d = 2
  CHECK(Poly{Rat(-4), Rat(2)}.eval(Rat(2)) == Rat(0));
}

TEST_CASE("divided difference in two variables") {
  SECTION("lambda^2 gives lambda + t") {
    const auto dd = divided_difference(Poly::monomial(2));
    REQUIRE(dd.degree_t() == 1);
    CHECK(dd.t_coeffs[0] == Poly::monomial(1));
    CHECK(dd.t_coeffs[1] == Poly::constant(Rat(1)));
  }
  SECTION("constants give zero") {
    CHECK(divided_difference(Poly::constant(Rat(7))).t_coeffs.empty());
    CHECK(divided_difference(Poly{}).t_coeffs.empty());
  }
  SECTION("lambda^3 gives lambda^2 + lambda t + t^2") {
    const auto dd = divided_difference(Poly::monomial(3));
    REQUIRE(dd.degree_t() == 2);
    CHECK(dd.t_coeffs[0] == Poly::monomial(2));
    CHECK(dd.t_coeffs[1] == Poly::monomial(1));
    CHECK(dd.t_coeffs[2] == Poly::constant(Rat(1)));
  }
  SECTION("identity p(x) - p(t) = (x - t) dd(x, t) at random rationals") {
    std::mt19937_64 rng(20240801);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly p = random_poly(rng, 8);
      const Rat x = random_rat(rng);
      const Rat t = random_rat(rng);
      if (x == t) continue;
      const auto dd = divided_difference(p);
      CHECK(p.eval(x) - p.eval(t) == (x - t) * dd.eval(x, t));
    }
  }
}

TEST_CASE("divided difference at a point") {
  const Poly p{Rat(11, 4), Rat(-3), Rat(1)};
  const Poly q = divided_difference_at(p, Rat(2));
  // p(x) - p(2) = (x - 2) q(x)
  CHECK((Poly{Rat(-2), Rat(1)} * q) == p - Poly::constant(p.eval(Rat(2))));
  CHECK(divided_difference_at(Poly::constant(Rat(3)), Rat(1)).is_zero());

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = random_poly(rng, 7);
    const Rat d = random_rat(rng);
    const Poly g = divided_difference_at(f, d);
    CHECK((Poly{-d, Rat(1)} * g) == f - Poly::constant(f.eval(d)));
  }
}

TEST_CASE("derivative") {
  const Poly p{Rat(5), Rat(-1), Rat(0), Rat(2)};  // 2x^3 - x + 5
  CHECK(p.derivative() == Poly{Rat(-1), Rat(0), Rat(6)});
  CHECK(Poly::constant(Rat(3)).derivative().is_zero());
}

TEST_CASE("double mirror") {
  const Poly p{Rat(1, 2), Rat(-3)};
  const PolyD q = to_double_poly(p);
  CHECK(q.coeff(0) == 0.5);
  CHECK(q.coeff(1) == -3.0);
  CHECK(q.eval(2.0) == Catch::Approx(-5.5));
}
