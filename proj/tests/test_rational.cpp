#include <catch2/catch_amalgamated.hpp>

#include "pencillab/rational.hpp"

using namespace pencillab;

TEST_CASE("rational canonical form") {
  const Rat x = make_rat(6, -8);
  CHECK(numerator(x) == -3);
  CHECK(denominator(x) == 4);
  CHECK(to_string(x) == "-3/4");
  CHECK(to_string(Rat(10, 5)) == "2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(make_rat(0, -7) == Rat(0));
  CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("12") == Rat(12));
  CHECK(parse_rat("6/-8") == Rat(-3, 4));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Rat(1, 4)) == Rat(1, 2));
  CHECK(exact_sqrt(Rat(9)) == Rat(3));
  CHECK(exact_sqrt(Rat(0)) == Rat(0));
  CHECK_FALSE(exact_sqrt(Rat(1, 3)).has_value());
  CHECK_FALSE(exact_sqrt(Rat(3, 4)).has_value());
  CHECK_FALSE(exact_sqrt(Rat(-1)).has_value());
}

TEST_CASE("big values stay exact") {
  Rat x(1);
  for (int i = 1; i <= 40; ++i) x *= Rat(i, i + 1);
  Rat y(1);
  for (int i = 40; i >= 1; --i) y *= Rat(i, i + 1);
  CHECK(x == y);
  CHECK(x == Rat(1, 41));
}
