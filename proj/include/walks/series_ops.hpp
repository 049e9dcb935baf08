#pragma once

#include <string>

#include "walks/series.hpp"

namespace walks {

/// Series in t with coefficients in Q[x, 1/x, y, 1/y].
using SeriesT = Series<LaurentPoly2>;
/// Series in t with coefficients in Q[x, 1/x] (x is a formal parameter).
using UniSeries = Series<LaurentPoly1>;
/// Plain Q[[t]].
using ScalarSeries = Series<Rational>;

enum class Var { X, Y };

/// Which exponents to keep when splitting a series along one variable.
struct Part {
  enum class Mode { Positive, Negative, NonNeg, NonPos, Coeff };
  Mode mode;
  int k = 0;

  static Part positive() { return {Mode::Positive}; }
  static Part negative() { return {Mode::Negative}; }
  static Part nonneg() { return {Mode::NonNeg}; }
  static Part nonpos() { return {Mode::NonPos}; }
  /// Coefficient of var^k, re-embedded with exponent 0.
  static Part coeff(int k) { return {Mode::Coeff, k}; }
};

SeriesT extract_part(const SeriesT& a, Var var, Part part);
UniSeries extract_part(const UniSeries& a, Part part);

/// var -> 1/var.
SeriesT substitute_inverse(const SeriesT& a, Var var);
UniSeries substitute_inverse(const UniSeries& a);

/// (x, y) -> (y, x).
SeriesT swap_xy(const SeriesT& a);

/// Multiplies every coefficient by x^di y^dj.
SeriesT times_monomial(const SeriesT& a, int di, int dj);
UniSeries times_monomial(const UniSeries& a, int di);

/// Laurent polynomial (exact in t) truncated at `order`; `by_power[n]` is
/// the coefficient of t^n.
SeriesT laurent_series(std::vector<LaurentPoly2> by_power, std::size_t order);
UniSeries laurent_series(std::vector<LaurentPoly1> by_power, std::size_t order);

/// View a bivariate series that does not involve `drop` as a univariate one
/// in the remaining variable. Throws if `drop` occurs.
UniSeries to_uni(const SeriesT& a, Var keep);
SeriesT from_uni(const UniSeries& a, Var as);

/// Constant-coefficient series as elements of Q[[t]] and back.
ScalarSeries to_scalar(const UniSeries& a);
UniSeries from_scalar(const ScalarSeries& a);

/// Coefficient of x^k as a Q[[t]] element.
ScalarSeries coefficient(const UniSeries& a, int k);
/// Coefficient of x^i y^j as a Q[[t]] element.
ScalarSeries coefficient(const SeriesT& a, int i, int j);

/// x -> x t. Requires nonnegative x-exponents.
UniSeries substitute_x_times_t(const UniSeries& a);

/// x^e -> x^((e + offset) / 2); every e + offset must be even. Implements the
/// f(sqrt x) * x^(offset/2) reindexing used for even/odd series.
UniSeries substitute_sqrt(const UniSeries& a, int offset);

/// x -> value.
ScalarSeries evaluate_at(const UniSeries& a, const Rational& value);

/// Largest |i|, |j| in the coefficient of t^n minus n, maximized over n;
/// <= 0 means every coefficient of t^n is supported on |i|, |j| <= n.
int support_excess(const SeriesT& a, int x0 = 0, int y0 = 0);

/// Canonical rendering: one line per nonzero term, ordered by t-power then
/// (i, j) lexicographic, followed by the truncation order.
std::string to_text(const SeriesT& a);
std::string to_text(const UniSeries& a);
std::string to_text(const ScalarSeries& a);

}  // namespace walks
