#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "walks/algebraic.hpp"
#include "walks/closed_forms.hpp"

using namespace walks;

namespace {

LaurentPoly1 poly(std::vector<long> c) { return LaurentPoly1::from_coeffs(0, std::vector<Rational>(c.begin(), c.end())); }

UniSeries even_series(std::vector<LaurentPoly1> by_even_power, std::size_t order) {
  UniSeries s(order);
  for (std::size_t k = 0; k < by_even_power.size() && 2 * k < order; ++k) s.set(2 * k, by_even_power[k]);
  return s;
}

}  // namespace

TEST_CASE("parametrizing series match the printed expansions") {
  ParamSeries p = parametrizing_series(9);
  CHECK(p.T == even_series({poly({1}), poly({4}), poly({36}), poly({396}), poly({4788})}, 9));
  CHECK(p.Z == even_series({poly({1}), poly({2}), poly({16}), poly({166}), poly({1934})}, 9));
  CHECK(p.U == even_series({poly({1}), poly({2}), poly({16}), poly({166, 2}), poly({1934, 40, 2})}, 9));
  CHECK(p.V == even_series({poly({}), poly({1}), poly({8, 1}), poly({82, 16, 2}), poly({944, 227, 48, 5})}, 9));
}

TEST_CASE("defining equations hold to t^40") {
  ParamSeries p = parametrizing_series(41);
  for (const char* id : {"T", "Z", "U", "V"}) {
    CAPTURE(id);
    CHECK(defining_residual(id, p).is_zero());
  }
}

TEST_CASE("truncation monotonicity of the implicit solver") {
  ParamSeries lo = parametrizing_series(12);
  ParamSeries hi = parametrizing_series(20);
  CHECK(hi.U.truncated(12) == lo.U);
  CHECK(hi.V.truncated(12) == lo.V);
}

TEST_CASE("solver reports a vanishing pivot") {
  // w^2 - t^2 = 0 with w(0) = 0: the linear condition is degenerate.
  auto residual = [](const ScalarSeries& w) { return w * w - ScalarSeries::monomial(1, 2, w.order()); };
  try {
    solve_implicit(residual, Rational(0), 5);
    FAIL("expected ImplicitSolveError");
  } catch (const ImplicitSolveError& e) {
    CHECK(e.order() == 1);
  }
  auto bad_start = [](const ScalarSeries& w) { return w - ScalarSeries::constant(1, w.order()); };
  CHECK_THROWS_AS(solve_implicit(bad_start, Rational(0), 5), ImplicitSolveError);
}

TEST_CASE("Z as a sum of two hypergeometric series") {
  ParamSeries p = parametrizing_series(31);
  ScalarSeries z = to_scalar(p.Z);
  for (long n = 0; 2 * n < 31; ++n) {
    Rational pw = 1;
    for (long k = 0; k < n; ++k) pw *= 16;
    Rational h = 2 * rising_factorial(make_rational(-1, 2), n) * rising_factorial(make_rational(1, 6), n) /
                     (rising_factorial(1, n) * rising_factorial(make_rational(1, 3), n)) -
                 rising_factorial(make_rational(-1, 2), n) * rising_factorial(make_rational(5, 6), n) /
                     (rising_factorial(1, n) * rising_factorial(make_rational(2, 3), n));
    CHECK(z[static_cast<std::size_t>(2 * n)] == pw * h);
    if (2 * n + 1 < 31) CHECK(z[static_cast<std::size_t>(2 * n + 1)] == 0);
  }
}

TEST_CASE("kernel roots") {
  const LaurentPoly1 s = LaurentPoly1::from_coeffs(-1, {1, 0, 1});
  UniSeries ys = kernel_root_Y(Lattice::Square, 12);
  CHECK(ys[0].is_zero());
  CHECK(ys[1] == LaurentPoly1(1));
  CHECK(ys[2] == s);
  CHECK(kernel_times_y(Lattice::Square, ys).is_zero());
  UniSeries yd = kernel_root_Y(Lattice::Diagonal, 12);
  CHECK(yd[1] == s);
  CHECK(yd[2].is_zero());
  CHECK(yd[3] == s * s * s);
  CHECK(kernel_times_y(Lattice::Diagonal, yd).is_zero());
}

TEST_CASE("X0 series") {
  ScalarSeries x0 = series_X0(10);
  CHECK(x0 == ScalarSeries(std::vector<Rational>{0, 2, 0, 8, 0, 64, 0, 640, 0, 7168}));
  // 1 - 2t(X + 1/X) = 0, multiplied by X.
  ScalarSeries t = ScalarSeries::monomial(1, 1, 30);
  ScalarSeries x = series_X0(30);
  CHECK((x - t * make_rational(2, 1) * (x * x + ScalarSeries::constant(1, 30))).is_zero());
  // X0 = (1/(2t)) sum Cat(k) (4t^2)^(k+1).
  for (long k = 0; 2 * k + 1 < 30; ++k) {
    BigInt cat = binomial(2 * k, k) / (k + 1);
    BigInt p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(k + 1));
    CHECK(x[static_cast<std::size_t>(2 * k + 1)] == Rational(cat * p4) / 2);
  }
}

TEST_CASE("endpoint rational expressions match the DP to t^24") {
  for (const auto& e : AlgebraicCatalog::builtin().endpoints()) {
    CAPTURE(e.id);
    CHECK_FALSE(endpoint_rational_check(e.id, 25).has_value());
  }
}

TEST_CASE("coincidence of the square (-1,0) and diagonal (-1,1) endpoint series") {
  WalkModel sq(StepSet::square(), Region::ThreeQuadrant, {0, 0});
  WalkModel dg(StepSet::diagonal(), Region::ThreeQuadrant, {0, 0});
  CHECK(endpoint_series(sq, {-1, 0}, 25) == endpoint_series(dg, {-1, 1}, 25));
}

TEST_CASE("closed values satisfy their quartics to t^30") {
  const auto& cat = AlgebraicCatalog::builtin();
  auto value = [&](const char* id) { return to_scalar(cat.value(id).expr.evaluate(31)); };
  CHECK_FALSE(check_poly_relation(value("S1"), cat.relation("S1_QUARTIC").poly).has_value());
  CHECK_FALSE(check_poly_relation(value("P0_SQ"), cat.relation("P0_QUARTIC").poly).has_value());
  CHECK_FALSE(check_poly_relation(value("F0_DIAG"), cat.relation("F0_QUARTIC").poly).has_value());
  // A perturbed series fails at the perturbed order or earlier.
  ScalarSeries s = value("S1");
  s.set(9, s[9] + 1);
  auto fail = check_poly_relation(s, cat.relation("S1_QUARTIC").poly);
  REQUIRE(fail.has_value());
  CHECK(*fail <= 9);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(eval_param("NOPE", 5), std::invalid_argument);
  CHECK_THROWS_AS(endpoint_rational_check("NOPE", 5), std::invalid_argument);
}
