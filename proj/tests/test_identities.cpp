#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "walks/identities.hpp"

using namespace walks;

namespace {

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  for (const auto& c : identity_catalog()) ids.push_back(c.id);
  return ids;
}

}  // namespace

TEST_CASE("worked verification examples") {
  CHECK(verify("EQ_T", 12).pass);
  CHECK(verify("ORBIT_Q", 12).pass);
  CHECK(verify("SPLIT_SQ", 10).pass);
}

TEST_CASE("every catalog entry passes") {
  const auto verdicts = verify_all(all_ids(), 12, 10);
  REQUIRE(verdicts.size() == identity_catalog().size());
  for (const auto& v : verdicts) {
    CAPTURE(v.id);
    CHECK(v.checks > 0);
    if (v.failure) CAPTURE(format_table({v}));
    CHECK(v.pass);
  }
}

TEST_CASE("catalog covers every family") {
  for (const char* id : {"EQ_T", "EQ_Q", "ORBIT_Q", "ORBIT_C", "EQ_A", "SPLIT_SQ", "FUNC_M_SQ", "KERNEL_CANCEL_SQ",
                         "RS_SQ", "CUBIC_S_SQ", "FACT_SQ", "DIAG_EQ_T", "DIAG_EQ_Q", "DIAG_ORBIT", "DIAG_EQ_A",
                         "DIAG_SPLIT", "DIAG_FUNC_M", "DIAG_KERNEL_CANCEL", "DIAG_RS", "DIAG_CUBIC_S", "DIAG_FACT",
                         "ASYM_SQ", "ASYM_DIAG"}) {
    CAPTURE(id);
    CHECK_NOTHROW(identity_case(id));
  }
}

TEST_CASE("unknown id is an error") { CHECK_THROWS_AS(verify("NO_SUCH_IDENTITY", 4), std::out_of_range); }

TEST_CASE("failure pinpoints the first differing monomial") {
  auto checks = identity_case("EQ_T").builder(8);
  REQUIRE(!checks.empty());
  IdentityCheck bad = checks.front();
  bad.rhs = bad.rhs + SeriesT::monomial(LaurentPoly2::monomial(Rational(5), 2, -1), 6, bad.rhs.order());
  bad.rhs = bad.rhs + SeriesT::monomial(LaurentPoly2::monomial(Rational(1), -3, 0), 7, bad.rhs.order());
  auto f = compare(bad, 8);
  REQUIRE(f);
  CHECK(f->t == 6);
  CHECK(f->i == 2);
  CHECK(f->j == -1);
  CHECK(Rational(f->rhs) - Rational(f->lhs) == 5);
  // Beyond the perturbation's reach the check still passes.
  CHECK_FALSE(compare(bad, 6));
}

TEST_CASE("negative checks fail when the sides agree") {
  IdentityCheck c{"same", SeriesT::constant(LaurentPoly2(1), 5), SeriesT::constant(LaurentPoly2(1), 5), false};
  CHECK(compare(c, 5));
  c.rhs = SeriesT::monomial(LaurentPoly2(1), 4, 5) + c.rhs;
  CHECK_FALSE(compare(c, 5));
}

TEST_CASE("verdicts do not depend on the order once passing") {
  for (std::size_t n : {3u, 6u, 9u}) {
    CAPTURE(n);
    CHECK(verify("FUNC_M_SQ", n).pass);
    CHECK(verify("DIAG_RS", n).pass);
  }
}

TEST_CASE("verdict JSON and table") {
  Verdict v = verify("EQ_Q", 6);
  nlohmann::json j = v;
  CHECK(j["id"] == "EQ_Q");
  CHECK(j["verdict"] == "pass");
  CHECK(j["order_checked"] == 6);
  CHECK_FALSE(j.contains("first_failure"));
  CHECK(format_table({v}).find("EQ_Q") != std::string::npos);
}

TEST_CASE("parallel suite matches sequential verdicts") {
  const std::vector<std::string> ids = {"EQ_T", "DIAG_EQ_T", "ASYM_SQ", "KERNEL_CANCEL_SQ"};
  auto par = verify_all(ids, 8, 6, 4);
  auto seq = verify_all(ids, 8, 6, 1);
  REQUIRE(par.size() == ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    CHECK(par[k].id == ids[k]);
    CHECK(par[k].pass == seq[k].pass);
    CHECK(par[k].order_checked == (ids[k] == "KERNEL_CANCEL_SQ" ? 6u : 8u));
  }
}

TEST_CASE("reflection examples") {
  auto a = reflect_check(Lattice::Square, -1, 0, 2);
  CHECK(a.pass);
  CHECK(a.forward == 3);
  CHECK(a.backward == 1);
  CHECK(a.wedge == 2);
  CHECK(a.wedge_point == Point{0, 0});

  auto b = reflect_check(Lattice::Square, -1, 0, 0);
  CHECK(b.pass);
  CHECK(b.forward == 1);
  CHECK(b.wedge == 1);

  auto c = reflect_check(Lattice::Diagonal, -2, 0, 2);
  CHECK(c.pass);
  CHECK(c.wedge_point == Point{0, 0});
}

TEST_CASE("reflection preconditions") {
  CHECK_THROWS_AS(reflect_check(Lattice::Square, 1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(reflect_check(Lattice::Square, -2, -1, 4), std::invalid_argument);
  CHECK_THROWS_AS(reflect_check(Lattice::Square, -1, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(reflect_check(Lattice::Diagonal, -1, 0, 4), std::invalid_argument);
}

TEST_CASE("reflection holds on random admissible points") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    const Lattice l = trial % 2 ? Lattice::Diagonal : Lattice::Square;
    const int n = std::uniform_int_distribution<int>(0, 10)(rng);
    const int j = std::uniform_int_distribution<int>(0, 6)(rng);
    int i = std::uniform_int_distribution<int>(-8, j - 1)(rng);
    if (l == Lattice::Diagonal && (i + j) % 2 != 0) --i;
    CAPTURE(trial);
    CAPTURE(i);
    CAPTURE(j);
    CAPTURE(n);
    auto r = reflect_check(l, i, j, n);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("reflection over every admissible point to length 10") {
  CHECK_FALSE(reflect_check_upto(Lattice::Square, 10));
  CHECK_FALSE(reflect_check_upto(Lattice::Diagonal, 10));
}

TEST_CASE("Gessel series from three-quadrant walks") {
  GesselSeries g = gessel_series_from_three_quadrants(10);
  CHECK(g.matches_direct);
  CHECK(g.axis[0].coeff(0) == 1);
  CHECK(g.diagonal[0].coeff(0) == 1);
  CHECK(g.axis[2].coeff(0) == 2);
}
