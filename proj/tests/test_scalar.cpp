// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "relgt/scalar.hpp"
#include "support/generators.hpp"

using namespace relgt;

TEST_CASE("integer_difference on the basic cases") {
  CHECK(*integer_difference(Rational(5, 6), Rational(-1, 6)) == 1);
  CHECK(!integer_difference(Rational(-1, 6), Rational(-2, 3)).has_value());
  CHECK(*integer_difference(Rational(-1), Rational(-1)) == 0);
}

TEST_CASE("integer_difference properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = gen::small_rational(rng, trial % 3);
    Rational b = gen::small_rational(rng, trial % 5);
    Rational c = gen::small_rational(rng, trial % 7);
    auto ab = integer_difference(a, b);
    auto ba = integer_difference(b, a);
    CHECK(ab.has_value() == ba.has_value());
    if (ab) CHECK(*ab == -*ba);
    CHECK(*integer_difference(a, a) == 0);
    auto bc = integer_difference(b, c);
    if (ab && bc) {
      auto ac = integer_difference(a, c);
      REQUIRE(ac.has_value());
      CHECK(*ac == *ab + *bc);
    }
  }
}

TEST_CASE("canonical form and membership helpers") {
  Rational r(2, 4);
  CHECK(numerator(r) == 1);
  CHECK(denominator(r) == 2);
  CHECK(in_z_leq(Rational(-3), -1));
  CHECK(!in_z_leq(Rational(0), -1));
  CHECK(!in_z_leq(Rational(-5, 2), -1)); // not an integer at all
  CHECK(in_z_gt(Rational(1), 0));
  CHECK(!in_z_gt(Rational(0), 0));
  CHECK(floor_of(Rational(-7, 6)) == -2);
  CHECK(floor_of(Rational(7, 6)) == 1);
  CHECK(fractional_part(Rational(-7, 6)) == Rational(5, 6));
}

TEST_CASE("text form round trip") {
  CHECK(to_string(Rational(-1, 6)) == "-1/6");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("5/6") == Rational(5, 6));
  CHECK(parse_rational(" -7/6 ") == Rational(-7, 6));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("a/b"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);

  auto xs = parse_rational_list("-1/6,-2/3,5/6");
  REQUIRE(xs.size() == 3);
  CHECK(xs[1] == Rational(-2, 3));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = gen::small_rational(rng, trial);
    CHECK(parse_rational(to_string(a)) == a);
  }
}
