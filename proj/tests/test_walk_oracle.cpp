#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "walks/walk_oracle.hpp"

using namespace walks;

namespace {

WalkModel model(const StepSet& s, Region r, Point start = {0, 0}) { return WalkModel(s, r, start); }

}  // namespace

TEST_CASE("step sets and regions") {
  CHECK_THROWS_AS(StepSet({}), std::invalid_argument);
  CHECK_THROWS_AS(StepSet({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(StepSet({{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(StepSet({{2, 0}}), std::invalid_argument);
  CHECK(StepSet::square().name() == "square");
  CHECK(StepSet({{0, 1}, {1, 0}, {0, -1}, {-1, 0}}).name() == "square");
  CHECK(parse_region("wedge135") == Region::Wedge135);
  CHECK_THROWS(parse_region("cone"));
  CHECK_THROWS_AS(model(StepSet::square(), Region::ThreeQuadrant, {-1, -1}), std::invalid_argument);
  CHECK(contains(Region::Wedge135, -1, 1));
  CHECK_FALSE(contains(Region::Wedge135, -2, 1));
}

TEST_CASE("count_walks examples") {
  auto sq3 = model(StepSet::square(), Region::ThreeQuadrant);
  CountTable one = count_walks(sq3, 1);
  CHECK(one.counts.size() == 4);
  for (Point p : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) CHECK(one.at(p) == 1);
  CHECK(count_walks(model(StepSet::square(), Region::Quadrant), 2).at({0, 0}) == 2);
  CHECK(count_walks(model(StepSet::diagonal(), Region::ThreeQuadrant), 2).at({0, 0}) == 3);
  CHECK(count_walks(model(StepSet::square(), Region::Wedge135), 2).at({0, 0}) == 2);
  CountTable zero = count_walks(sq3, 0);
  CHECK(zero.counts.size() == 1);
  CHECK(zero.at({0, 0}) == 1);
}

TEST_CASE("endpoint series and totals") {
  auto sq3 = model(StepSet::square(), Region::ThreeQuadrant);
  ScalarSeries s = endpoint_series(sq3, {-1, 0}, 4);
  CHECK(s == ScalarSeries(std::vector<Rational>{0, 1, 0, 7}));
  CHECK(endpoint_series(sq3, {0, 0}, 3)[0] == 1);
  CHECK_THROWS(endpoint_series(sq3, {-1, -1}, 3));
  auto shifted = model(StepSet::square(), Region::ThreeQuadrant, {-1, 0});
  CHECK(count_walks(shifted, 2).at({-1, 0}) == 3);
  CHECK(total_count(sq3, 0) == 1);
  CHECK(total_count(sq3, 1) == 4);
  CHECK(total_count(sq3, 2) == 14);
  SeriesT g = generating_series(sq3, 2);
  CHECK(g[0] == LaurentPoly2(1));
  CHECK(g[1].terms().size() == 4);
}

TEST_CASE("property: x/y symmetry and parity") {
  for (const StepSet& steps : {StepSet::square(), StepSet::diagonal()}) {
    for (Region r : {Region::Quadrant, Region::ThreeQuadrant}) {
      auto tables = count_walks_upto(model(steps, r), 12);
      for (const auto& t : tables)
        for (const auto& [p, c] : t.counts) {
          CHECK(t.at({p.j, p.i}) == c);
          CHECK(contains(r, p.i, p.j));
          CHECK(std::abs(p.i) <= t.n);
          CHECK(std::abs(p.j) <= t.n);
          if (steps.name() == "square") {
            CHECK((t.n - p.i - p.j) % 2 == 0);
          } else {
            CHECK((t.n - p.i) % 2 == 0);
            CHECK((t.n - p.j) % 2 == 0);
          }
        }
    }
  }
}

TEST_CASE("property: region nesting") {
  const int n_max = 10;
  std::vector<Region> chain{Region::Quadrant, Region::Wedge135, Region::HalfPlane, Region::ThreeQuadrant,
                            Region::FullPlane};
  for (const StepSet& steps : {StepSet::square(), StepSet::diagonal()}) {
    std::vector<std::vector<CountTable>> all;
    for (Region r : chain) all.push_back(count_walks_upto(model(steps, r), n_max));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      // HalfPlane and ThreeQuadrant are not nested in each other; skip that pair.
      if (chain[k] == Region::HalfPlane) continue;
      for (int n = 0; n <= n_max; ++n)
        for (const auto& [p, c] : all[k][static_cast<std::size_t>(n)].counts)
          CHECK(c <= all[k + 1][static_cast<std::size_t>(n)].at(p));
    }
    for (int n = 0; n <= n_max; ++n)
      for (const auto& [p, c] : all[2][static_cast<std::size_t>(n)].counts)
        CHECK(c <= all[4][static_cast<std::size_t>(n)].at(p));
  }
}

TEST_CASE("property: full-plane square counts are products of binomials") {
  auto tables = count_walks_upto(model(StepSet::square(), Region::FullPlane), 14);
  for (const auto& t : tables)
    for (int i = -t.n; i <= t.n; ++i)
      for (int j = -t.n; j <= t.n; ++j) {
        // Rotating by 45 degrees makes the coordinates i + j and i - j independent +-1 walks.
        BigInt expected = 0;
        if ((t.n + i + j) % 2 == 0)
          expected = binomial(t.n, (t.n + i + j) / 2) * binomial(t.n, (t.n + i - j) / 2);
        CHECK(t.at({i, j}) == expected);
      }
}

TEST_CASE("determinism across thread counts") {
  auto m = model(StepSet::diagonal(), Region::ThreeQuadrant, {-2, 0});
  auto a = count_walks(m, 30, 1);
  auto b = count_walks(m, 30, 4);
  CHECK(a.counts == b.counts);
}

TEST_CASE("json round trip") {
  CountTable t = count_walks(model(StepSet::square(), Region::ThreeQuadrant), 40);
  nlohmann::json j = t;
  CountTable back = j.get<CountTable>();
  CHECK(back.n == t.n);
  CHECK(back.counts == t.counts);
  CHECK(j["counts"][0]["count"].is_string());
}

TEST_CASE("fast paths agree with exact totals") {
  auto m = model(StepSet::square(), Region::ThreeQuadrant);
  auto tables = count_walks_upto(m, 30);
  auto ratios = normalized_totals(m, 30, 2);
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  auto mods = total_counts_mod(m, 30, p);
  for (int n = 0; n <= 30; ++n) {
    BigInt total = tables[static_cast<std::size_t>(n)].total();
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    double exact_ratio = mpq_class(total, four_n).get_d();
    CHECK(ratios[static_cast<std::size_t>(n)] == doctest::Approx(exact_ratio).epsilon(1e-12));
    BigInt r = total % BigInt(std::to_string(p));
    CHECK(mods[static_cast<std::size_t>(n)] == std::stoull(r.get_str()));
  }
}
