#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "walks/closed_forms.hpp"

using namespace walks;

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(make_rational(1, 2), 0) == 1);
  CHECK(rising_factorial(make_rational(1, 2), 2) == make_rational(3, 4));
  CHECK(rising_factorial(make_rational(5, 6), 3) == make_rational(935, 216));
  CHECK(rising_factorial(-2, 3) == 0);
}

TEST_CASE("quadrant counts") {
  CHECK(quadrant_square_count(0, 0, 0) == 1);
  CHECK(quadrant_square_count(0, 0, 2) == 2);
  CHECK(quadrant_square_count(1, 0, 1) == 1);
  CHECK(quadrant_square_count(1, 0, 2) == 0);
  CHECK(quadrant_square_count(3, 0, 1) == 0);
  CHECK_THROWS_AS(quadrant_square_count(-1, 0, 1), std::invalid_argument);
  CHECK(quadrant_diag_count(0, 0, 0) == 1);
  CHECK(quadrant_diag_count(0, 0, 2) == 1);
  CHECK(quadrant_diag_count(2, 0, 2) == 1);
  CHECK(quadrant_diag_count(1, 0, 2) == 0);
}

TEST_CASE("gessel numbers") {
  std::vector<long> expected{1, 2, 11, 85, 782, 8004};
  for (long n = 0; n < 6; ++n) CHECK(gessel_count(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("catalog examples and errors") {
  CHECK(eval_closed_form("DIAG_C00", 1) == 3);
  CHECK(eval_closed_form("SQ_ASYM_CM10", 1) == 3);
  CHECK(eval_closed_form("GESSEL", 0) == 1);
  CHECK_THROWS_AS(eval_closed_form("SQ_CM10", 1), std::invalid_argument);
  const auto& e = ClosedFormCatalog::builtin().find("SQ_C00");
  CHECK_THROWS_AS(eval_closed_form_at_length(e, 3), std::invalid_argument);
  CHECK(eval_closed_form_at_length(e, 4) == 32);

  ClosedFormEntry bad = e;
  bad.terms[0].prefactor = {make_rational(1, 7)};
  CHECK_THROWS_AS(eval_closed_form(bad, 1), std::domain_error);
}

TEST_CASE("property: every catalog entry matches the DP for 2n <= 24") {
  for (const auto& e : ClosedFormCatalog::builtin().entries()) {
    CAPTURE(e.id);
    auto tables = count_walks_upto(e.model(), 24);
    for (long n = 0; 2 * n <= 24; ++n) {
      BigInt v = eval_closed_form(e, n);
      CHECK(v >= 0);
      CHECK(v == tables[static_cast<std::size_t>(2 * n)].at(e.endpoint));
    }
  }
}

TEST_CASE("printed diagonal (0,-2) coefficients disagree with the DP") {
  ClosedFormEntry printed = ClosedFormCatalog::builtin().find("DIAG_ASYM_C0M2");
  printed.terms[0].prefactor = {make_rational(2, 9)};
  printed.terms[1].prefactor = {make_rational(-5, 9)};
  printed.terms[2].prefactor = {make_rational(2, 9)};
  CHECK(printed.evaluate(0) == make_rational(-1, 9));
}

TEST_CASE("property: reflection between the (-1,0) forms and Gessel numbers") {
  for (long n = 0; n <= 30; ++n)
    CHECK(eval_closed_form("SQ_ASYM_CM10", n) - eval_closed_form("SQ_ASYM_C0M1", n) == gessel_count(n));
}

TEST_CASE("asymptotic sanity for diagonal c00") {
  const long n = 200;
  BigInt v = eval_closed_form("DIAG_C00", n);
  BigInt p16;
  mpz_ui_pow_ui(p16.get_mpz_t(), 16, n);
  double ratio = mpq_class(v, p16).get_d() * std::pow(2.0 * n, 5.0 / 3.0);
  double constant = 32.0 / 9.0 * std::tgamma(2.0 / 3.0) / M_PI;
  CHECK(std::abs(ratio / constant - 1.0) < 0.10);
}

TEST_CASE("catalog JSON round trip") {
  const auto& c = ClosedFormCatalog::builtin();
  nlohmann::json j = c;
  ClosedFormCatalog back = j.get<ClosedFormCatalog>();
  REQUIRE(back.entries().size() == c.entries().size());
  for (long n = 0; n < 5; ++n)
    for (std::size_t k = 0; k < c.entries().size(); ++k)
      CHECK(back.entries()[k].evaluate(n) == c.entries()[k].evaluate(n));
  nlohmann::json again = back;
  CHECK(again == j);
}
