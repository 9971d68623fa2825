#include <doctest.h>

#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/multipoly.hpp"

using namespace hurwitz;

namespace {

MultiPoly random_poly(const VarLayout& layout, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  MultiPoly p(layout);
  for (int t = 0; t < 4; ++t) {
    Exponent e(layout.arity());
    for (auto& x : e) x = static_cast<std::uint16_t>(deg(rng));
    p += MultiPoly::monomial(layout, e, make_rational(coeff(rng), 1 + (t % 2)));
  }
  return p;
}

}  // namespace

TEST_CASE("geometric and linear factors") {
  const VarLayout none{};
  const MultiPoly one(none, 1);
  auto g = geometric_factor(1, one, 3);
  for (int k = 0; k <= 3; ++k) CHECK(coeff_z(g, k).constant_term() == 1);
  auto g2 = geometric_factor(2, one, 2);
  CHECK(coeff_z(g2, 0).constant_term() == 1);
  CHECK(coeff_z(g2, 1).constant_term() == 2);
  CHECK(coeff_z(g2, 2).constant_term() == 4);
  CHECK_THROWS_AS(coeff_z(g2, 3), DomainError);

  const VarLayout v1{0, 1};
  const MultiPoly v = MultiPoly::variable(v1, v1.v(0));
  auto gv = geometric_factor(1, v, 2);
  CHECK(coeff_z(gv, 1) == v);
  CHECK(coeff_z(gv, 2) == v * v);
  CHECK(MultiPoly::monomial_name(VarLayout{1, 1}, Exponent{2, 1}) == "u1^2 v1");

  auto lin = linear_factor(3, one, 2);
  CHECK(coeff_z(lin, 1).constant_term() == 3);
  CHECK(coeff_z(lin, 2).is_zero());
}

TEST_CASE("ring laws on random small polynomials") {
  const VarLayout layout{1, 2};
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(layout, rng);
    const auto b = random_poly(layout, rng);
    const auto c = random_poly(layout, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("degree caps drop monomials") {
  const VarLayout layout{1, 0};
  const MultiPoly u = MultiPoly::variable(layout, layout.u(0));
  DegreeCaps caps{{1}};
  const auto sq = MultiPoly::mul(u, u, &caps);
  CHECK(sq.is_zero());
  CHECK(caps.admits(Exponent{1}));
  CHECK_FALSE(caps.admits(Exponent{2}));
}

TEST_CASE("layout mismatch is rejected") {
  MultiPoly a(VarLayout{1, 0}, 1);
  MultiPoly b(VarLayout{0, 1}, 1);
  CHECK_THROWS_AS(a += b, DomainError);
}

TEST_CASE("evaluation") {
  const VarLayout layout{1, 1};
  MultiPoly p = MultiPoly::variable(layout, layout.u(0), 2) * MultiPoly::variable(layout, layout.v(0));
  p += MultiPoly(layout, 5);
  CHECK(p.evaluate({Rational(3), Rational(1, 2)}) == 8);
}
