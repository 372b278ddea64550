#include "cel/rational.hpp"

#include <doctest.h>

#include <random>

using cel::Gaussian;
using cel::Rational;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(cel::parse_rational("7") == 7);
  CHECK(cel::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(cel::parse_rational("0.125") == Rational(1, 8));
  CHECK(cel::parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(cel::parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK(cel::parse_rational("010") == 10);
  CHECK(cel::parse_rational("0.09") == Rational(9, 100));
  CHECK(cel::parse_rational("3/-4") == Rational(-3, 4));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(cel::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(cel::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(cel::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cel::parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("to_string is canonical") {
  CHECK(cel::to_string(Rational(-6, 8)) == "-3/4");
  CHECK(cel::to_string(Rational(4, 2)) == "2");
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int k = 0; k < 500; ++k) {
    const double x = d(rng) / (1 + k);
    CHECK(std::stod(cel::format_double(x)) == x);
  }
  CHECK(cel::format_double(0.1) == "0.1");
}

TEST_CASE("Gaussian field arithmetic") {
  const Gaussian z(Rational(1, 2), Rational(-3));
  const Gaussian w(Rational(2), Rational(5, 3));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK((z * w) / w == z);
  CHECK(z * z.conj() == Gaussian(z.norm2()));
  CHECK_THROWS(z / Gaussian(0));
}
