#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "geo/rational.hpp"
#include "geo/sampler.hpp"
#include "geo/scalar.hpp"

using geo::Rational;
using geo::operator""_q;

TEST_CASE("parse accepts integer and fraction literals") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("2/5") == Rational(2, 5));
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("10/2") == Rational(5));
}

TEST_CASE("parse rejects everything outside the literal grammar") {
  const char* bad[] = {"",     "+3",   "1.5", "1e3",  " 2",  "2 ",   "2 /3", "1/0",
                       "1/-2", "-1/-2", "a",  "1/2/3", "--1", "-",    "3/",   "/3",
                       "0x10", "1,5"};
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(Rational::parse(text), std::domain_error);
  }
}

TEST_CASE("canonical form: reduced, positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-4, 6).numerator() == -2);
  CHECK(Rational(-4, 6).denominator() == 3);
  CHECK_THROWS_AS(Rational(Rational::Int(1), Rational::Int(0)), std::domain_error);
}

TEST_CASE("str round-trips through parse") {
  geo::RationalSampler sampler(101, 50, 40);
  for (int i = 0; i < 200; ++i) {
    const Rational v = sampler.value();
    CHECK(Rational::parse(v.str()) == v);
  }
}

TEST_CASE("exact field arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rational acc(1, 2);
  acc += Rational(1, 3);
  CHECK(acc == Rational(5, 6));
  acc -= Rational(1, 2);
  CHECK(acc == Rational(1, 3));
  acc *= Rational(3);
  CHECK(acc == Rational(1));
  acc /= Rational(4);
  CHECK(acc == Rational(1, 4));
  CHECK_THROWS_AS(acc /= Rational(0), std::domain_error);
}

TEST_CASE("field laws hold on random triples") {
  geo::RationalSampler sampler(202, 9, 7);
  for (int i = 0; i < 100; ++i) {
    const Rational a = sampler.value(), b = sampler.value(), c = sampler.value();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("equality is cross-multiplication equality") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(1, 2) == Rational(-3, -6));
  CHECK(Rational(1, 2) != Rational(2, 3));
  geo::RationalSampler sampler(303, 9, 7);
  for (int i = 0; i < 100; ++i) {
    const Rational a = sampler.value(), b = sampler.nonzero();
    // p/q == p'/q'  iff  p q' == p' q; scaling both parts never changes the value.
    CHECK(Rational(a.numerator() * b.numerator(), a.denominator() * b.numerator()) == a);
  }
}

TEST_CASE("total order") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-2) < Rational(-1, 2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(5, 3) > Rational(3, 2));

  std::vector<Rational> values = {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 3),
                                  Rational(-1, 4)};
  std::sort(values.begin(), values.end());
  CHECK(values.front() == Rational(-3));
  CHECK(values.back() == Rational(7, 3));
  CHECK(std::is_sorted(values.begin(), values.end()));
}

TEST_CASE("sign, is_zero, to_double") {
  CHECK(Rational(0).is_zero());
  CHECK(!Rational(1, 1000000).is_zero());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5, 3).sign() == 1);
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-3).to_double() == -3.0);
}

TEST_CASE("user-defined literals") {
  CHECK(3_q == Rational(3));
  CHECK("1/2"_q == Rational(1, 2));
  CHECK("-7/3"_q == Rational(-7, 3));
}

TEST_CASE("arbitrary precision: no overflow at any magnitude") {
  const Rational big = Rational::parse("123456789012345678901234567890");
  CHECK(big.str() == "123456789012345678901234567890");
  const Rational square = big * big;
  CHECK(square / big == big);
  // 1/3 summed 3^20 times is exactly 3^19: catches any hidden rounding.
  Rational third(1, 3);
  Rational sum(0);
  Rational pow(1);
  for (int i = 0; i < 20; ++i) pow *= Rational(3);
  CHECK(third * pow == pow / Rational(3));
}

TEST_CASE("scalar ops traits used by the generic frame layer") {
  CHECK(geo::ScalarOps<Rational>::from_int(4) == Rational(4));
  CHECK(geo::ScalarOps<Rational>::str(Rational(-1, 2)) == "-1/2");
  CHECK(geo::is_zero(Rational(0)));
  CHECK(!geo::is_zero(Rational(1, 7)));

  geo::float_tolerance() = 1e-9;
  CHECK(geo::is_zero(1e-12));
  CHECK(!geo::is_zero(1e-6));
  CHECK(geo::ScalarOps<double>::from_int(4) == 4.0);
}
