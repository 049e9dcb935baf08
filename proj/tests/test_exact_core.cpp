#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "walks/series_ops.hpp"
#include "walks/walk_oracle.hpp"

using namespace walks;

namespace {

LaurentPoly2 mono(long c, int i, int j) { return LaurentPoly2::monomial(Rational(c), i, j); }

SeriesT random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), count(0, 3);
  SeriesT s(order);
  for (std::size_t n = 0; n < order; ++n) {
    LaurentPoly2 p;
    for (int k = count(rng); k > 0; --k) p.add_term(expo(rng), expo(rng), coef(rng));
    s.set(n, p);
  }
  return s;
}

UniSeries uni(std::vector<std::vector<long>> rows, std::size_t order) {
  UniSeries s(order);
  for (std::size_t n = 0; n < rows.size() && n < order; ++n) {
    std::vector<Rational> c(rows[n].begin(), rows[n].end());
    s.set(n, LaurentPoly1::from_coeffs(0, c));
  }
  return s;
}

}  // namespace

TEST_CASE("rational normalization") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(parse_rational(" 10/4 ") == make_rational(5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK_THROWS(to_integer(make_rational(1, 2)));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("laurent polynomials") {
  LaurentPoly1 p = LaurentPoly1::from_coeffs(-1, {1, 0, 1});  // x^-1 + x
  CHECK(p.low() == -1);
  CHECK(p.high() == 1);
  CHECK(p.inverted() == p);
  LaurentPoly1 sq = p * p;
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(2) == 1);
  auto q = LaurentPoly1::exact_quotient(sq, p);
  REQUIRE(q);
  CHECK(*q == p);
  CHECK_FALSE(LaurentPoly1::exact_quotient(p, LaurentPoly1::from_coeffs(0, {1, 1})));
  LaurentPoly2 z = mono(1, 1, 0) - mono(1, 1, 0);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("series_mul: (1 + x t)(1 + x^-1 t)") {
  SeriesT a = SeriesT::polynomial({LaurentPoly2(1), mono(1, 1, 0)}, 3);
  SeriesT b = SeriesT::polynomial({LaurentPoly2(1), mono(1, -1, 0)}, 3);
  SeriesT c = a * b;
  CHECK(c.order() == 3);
  CHECK(c[0] == LaurentPoly2(1));
  CHECK(c[1] == mono(1, 1, 0) + mono(1, -1, 0));
  CHECK(c[2] == LaurentPoly2(1));
  CHECK(a * SeriesT::constant(1, 3) == a);
  CHECK((a * SeriesT::constant(1, 2)).order() == 2);
}

TEST_CASE("extract_part and substitute_inverse") {
  SeriesT s = SeriesT::polynomial({LaurentPoly2(1), mono(1, 1, 0) + mono(1, -1, 0)}, 3);
  SeriesT pos = extract_part(s, Var::X, Part::positive());
  CHECK(pos[0].is_zero());
  CHECK(pos[1] == mono(1, 1, 0));
  SeriesT c0 = extract_part(s, Var::X, Part::coeff(0));
  CHECK(c0[0] == LaurentPoly2(1));
  CHECK(c0[1].is_zero());
  CHECK(substitute_inverse(pos, Var::X)[1] == mono(1, -1, 0));

  SeriesT kernel = SeriesT::polynomial(
      {LaurentPoly2(1), -(mono(1, 1, 0) + mono(1, -1, 0) + mono(1, 0, 1) + mono(1, 0, -1))}, 6);
  CHECK(substitute_inverse(kernel, Var::X) == kernel);
  CHECK(substitute_inverse(kernel, Var::Y) == kernel);
}

TEST_CASE("series_sqrt") {
  CHECK(walks::sqrt(ScalarSeries::constant(1, 5)) == ScalarSeries::constant(1, 5));
  ScalarSeries a = ScalarSeries::polynomial({1, 0, -16}, 8);
  ScalarSeries r = walks::sqrt(a);
  CHECK(r == ScalarSeries(std::vector<Rational>{1, 0, -8, 0, -32, 0, -256, 0}));
  CHECK(r * r == a);
  CHECK_THROWS_AS(walks::sqrt(ScalarSeries::polynomial({2, 1}, 4)), SeriesError);

  // T = 1 + 4t^2 + 36t^4 + 396t^6 + 4788t^8 gives Z = sqrt(T).
  UniSeries t = uni({{1}, {0}, {4}, {0}, {36}, {0}, {396}, {0}, {4788}}, 9);
  UniSeries z = walks::sqrt(t);
  CHECK(z == uni({{1}, {0}, {2}, {0}, {16}, {0}, {166}, {0}, {1934}}, 9));
}

TEST_CASE("inverse and divide") {
  ScalarSeries one_minus_t = ScalarSeries::polynomial({1, -1}, 6);
  ScalarSeries geo = inverse(one_minus_t);
  for (std::size_t n = 0; n < 6; ++n) CHECK(geo[n] == 1);
  // t^2 (1 + t) / (t (3 + 3t)) = t / 3; loses one order.
  ScalarSeries num = ScalarSeries::polynomial({0, 0, 1, 1}, 8);
  ScalarSeries den = ScalarSeries::polynomial({0, 3, 3}, 8);
  ScalarSeries q = divide(num, den);
  CHECK(q.order() == 7);
  CHECK(q[1] == make_rational(1, 3));
  CHECK(q[2] == 0);
  CHECK_THROWS_AS(divide(ScalarSeries::polynomial({1}, 4), den), SeriesError);
  CHECK_THROWS_AS(inverse(ScalarSeries::polynomial({0, 1}, 4)), SeriesError);
}

TEST_CASE("compose substitutes a series for x") {
  // f = x + x^-1 (constant in t), g = 1 + t: f(g) = 1 + t + 1/(1 + t).
  UniSeries f = UniSeries::constant(LaurentPoly1::from_coeffs(-1, {1, 0, 1}), 5);
  ScalarSeries g = ScalarSeries::polynomial({1, 1}, 5);
  ScalarSeries h = compose(f, g);
  CHECK(h == ScalarSeries(std::vector<Rational>{2, 0, 1, -1, 1}));
  // f = x^2 t, g = t: t^3.
  UniSeries f2 = UniSeries::monomial(LaurentPoly1::monomial(1, 2), 1, 6);
  ScalarSeries h2 = compose(f2, ScalarSeries::monomial(1, 1, 6));
  CHECK(h2 == ScalarSeries::monomial(1, 3, 6));
}

TEST_CASE("substitutions on univariate series") {
  UniSeries a = UniSeries::polynomial({LaurentPoly1::from_coeffs(0, {1, 1}), LaurentPoly1::monomial(1, 2)}, 4);
  UniSeries b = substitute_x_times_t(a);  // 1 + x t + x^2 t^3
  CHECK(b[0] == LaurentPoly1(1));
  CHECK(b[1] == LaurentPoly1::monomial(1, 1));
  CHECK(b[3] == LaurentPoly1::monomial(1, 2));
  UniSeries odd = UniSeries::constant(LaurentPoly1::from_coeffs(1, {1, 0, 5}), 2);
  UniSeries half = substitute_sqrt(odd, -1);
  CHECK(half[0] == LaurentPoly1::from_coeffs(0, {1, 5}));
  CHECK_THROWS_AS(substitute_sqrt(odd, 0), SeriesError);
}

TEST_CASE("canonical text rendering") {
  SeriesT s = SeriesT::polynomial({LaurentPoly2(1), mono(1, 1, 0) + mono(1, -1, 0) + LaurentPoly2(make_rational(1, 2))}, 2);
  CHECK(to_text(s) == "t^0 x^0 y^0 : 1\nt^1 x^-1 y^0 : 1\nt^1 x^0 y^0 : 1/2\nt^1 x^1 y^0 : 1\nO(t^2)\n");
}

TEST_CASE("property: ring axioms on random series") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 40; ++trial) {
    SeriesT a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: parts reassemble and inversion is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SeriesT a = random_series(rng, 6);
    for (Var v : {Var::X, Var::Y}) {
      CHECK(extract_part(a, v, Part::positive()) + extract_part(a, v, Part::nonpos()) == a);
      CHECK(extract_part(a, v, Part::negative()) + extract_part(a, v, Part::nonneg()) == a);
      CHECK(substitute_inverse(substitute_inverse(a, v), v) == a);
    }
    CHECK(swap_xy(swap_xy(a)) == a);
  }
}

TEST_CASE("property: sqrt squares back and truncation is monotone") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{1};
    for (int k = 1; k < 12; ++k) c.push_back(coef(rng));
    ScalarSeries a(c);
    ScalarSeries r = walks::sqrt(a);
    CHECK(r * r == a);
    CHECK(walks::sqrt(a.truncated(7)) == r.truncated(7));
    CHECK(inverse(a.truncated(5)) == inverse(a).truncated(5));
  }
}

TEST_CASE("K C identity on the square three-quadrant model") {
  WalkModel model(StepSet::square(), Region::ThreeQuadrant, {0, 0});
  const std::size_t order = 6;
  SeriesT c = generating_series(model, order);
  SeriesT kernel = SeriesT::polynomial(
      {LaurentPoly2(1), -(mono(1, 1, 0) + mono(1, -1, 0) + mono(1, 0, 1) + mono(1, 0, -1))}, order);
  // C_-(1/x): walks ending on the negative x-axis.
  SeriesT neg_x = extract_part(extract_part(c, Var::X, Part::negative()), Var::Y, Part::coeff(0));
  SeriesT neg_y = swap_xy(neg_x);
  SeriesT rhs = SeriesT::constant(1, order) - times_monomial(neg_x, 0, -1).shifted(1) -
                times_monomial(neg_y, -1, 0).shifted(1);
  CHECK(agrees(kernel * c, rhs));
  CHECK(support_excess(c) <= 0);
}
