#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/exactnum.hpp"
#include "hurwitz/multipoly.hpp"
#include "reference.hpp"

using namespace hurwitz;

TEST_CASE("rationals print canonically and parse back") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("14/21") == Rational(2, 3));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("powers with zero and negative exponents") {
  CHECK(pow(Rational(0), 0) == 1);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  for (int n = 0; n <= 30; ++n) CHECK(bernoulli(n) == reference::bernoulli(n));
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg(1) == Rational(-1, 12));
  CHECK(zeta_neg(2) == 0);
  CHECK(zeta_neg(3) == Rational(1, 120));
  for (int m = 1; m <= 6; ++m) CHECK(zeta_neg(2 * m) == 0);
}

TEST_CASE("stirling numbers") {
  CHECK(stirling(StirlingKind::first, 4, 2) == 11);
  CHECK(stirling(StirlingKind::second, 4, 2) == 7);
  CHECK(stirling(StirlingKind::first, 4, 3) == 6);  // e_1(1,2,3)
  CHECK(stirling(StirlingKind::first, 3, 5) == 0);
  CHECK_THROWS_AS(stirling(StirlingKind::second, -1, 0), DomainError);
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling(StirlingKind::first, n, k) == reference::stirling_first(n, k));
      CHECK(stirling(StirlingKind::second, n, k) == reference::stirling_second(n, k));
    }
}

TEST_CASE("products of linear factors give stirling numbers") {
  const VarLayout none{};
  const MultiPoly one(none, 1);
  for (int n = 1; n <= 10; ++n) {
    auto s = TruncSeries::one(none, n);
    for (int i = 1; i <= n; ++i) s.mul_linear(Rational(i), one);
    for (int k = 0; k <= n; ++k) CHECK(s[k].constant_term() == Rational(stirling(StirlingKind::first, n + 1, n + 1 - k)));
  }
  for (int n = 1; n <= 8; ++n) {
    auto s = TruncSeries::one(none, 8);
    for (int i = 1; i <= n; ++i) s.div_linear(Rational(i), one);
    for (int k = 0; k <= 8; ++k) CHECK(s[k].constant_term() == Rational(stirling(StirlingKind::second, n + k, n)));
  }
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 4)) == "0.25");
  CHECK(to_decimal(Rational(-3)) == "-3");
  CHECK(to_decimal(Rational(1, 1000000000)).find('e') != std::string::npos);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i(0, 1);
  CHECK(i * i == GaussianRational(-1));
  CHECK(pow(GaussianRational(1, 1), 2) == GaussianRational(0, 2));
  CHECK((GaussianRational(1) / GaussianRational(1, 1)) == GaussianRational(Rational(1, 2), Rational(-1, 2)));
  CHECK(to_string(GaussianRational(Rational(1, 2), -3)) == "1/2-3i");
}
