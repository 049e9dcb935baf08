#include "walks/identities.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace walks {

namespace {

using LP = LaurentPoly2;
using LP1 = LaurentPoly1;

// ---------------------------------------------------------------- building blocks

LP mono(int i, int j, const Rational& c = 1) { return LP::monomial(c, i, j); }
LP1 xpow(int e, const Rational& c = 1) { return LP1::monomial(c, e); }

SeriesT cst(const LP& p, std::size_t n) { return SeriesT::constant(p, n); }
SeriesT lift(const ScalarSeries& s) { return s.map([](const Rational& r) { return LP(r); }); }
SeriesT lift(const UniSeries& s) { return from_uni(s, Var::X); }
UniSeries uni(const ScalarSeries& s) { return from_scalar(s); }
UniSeries ucst(const LP1& p, std::size_t n) { return UniSeries::constant(p, n); }
ScalarSeries scst(const Rational& r, std::size_t n) { return ScalarSeries::constant(r, n); }
ScalarSeries t_pow(std::size_t k, std::size_t n) { return ScalarSeries::monomial(1, k, n); }

/// x y F(x,y) - x^-1 y F(1/x,y) + x^-1 y^-1 F(1/x,1/y) - x y^-1 F(x,1/y).
SeriesT orbit(const SeriesT& f) {
  SeriesT fx = substitute_inverse(f, Var::X);
  SeriesT fy = substitute_inverse(f, Var::Y);
  SeriesT fxy = substitute_inverse(fx, Var::Y);
  return times_monomial(f, 1, 1) - times_monomial(fx, -1, 1) + times_monomial(fxy, -1, -1) -
         times_monomial(fy, 1, -1);
}

/// (x - 1/x)(y - 1/y).
LP orbit_sum() { return mono(1, 1) - mono(1, -1) - mono(-1, 1) + mono(-1, -1); }

SeriesT quadrant_part(const SeriesT& f) {
  return extract_part(extract_part(f, Var::X, Part::nonneg()), Var::Y, Part::nonneg());
}
SeriesT row0(const SeriesT& f) { return extract_part(f, Var::Y, Part::coeff(0)); }  // F(x,0)
SeriesT col0(const SeriesT& f) { return extract_part(f, Var::X, Part::coeff(0)); }  // F(0,y)
SeriesT neg_x_axis(const SeriesT& f) { return row0(extract_part(f, Var::X, Part::negative())); }
SeriesT neg_y_axis(const SeriesT& f) { return col0(extract_part(f, Var::Y, Part::negative())); }
SeriesT at00(const SeriesT& f) { return lift(coefficient(f, 0, 0)); }
/// x^-1 F(1/x, y) and y^-1 F(x, 1/y).
SeriesT left_embed(const SeriesT& f) { return times_monomial(substitute_inverse(f, Var::X), -1, 0); }
SeriesT below_embed(const SeriesT& f) { return times_monomial(substitute_inverse(f, Var::Y), 0, -1); }

/// x + 1/x on the diagonal lattice, 1 on the square lattice: the factor that
/// multiplies a boundary series in the step-by-step equation.
LP hx(Lattice l) { return l == Lattice::Square ? LP(1) : mono(1, 0) + mono(-1, 0); }
LP hy(Lattice l) { return l == Lattice::Square ? LP(1) : mono(0, 1) + mono(0, -1); }

IdentityCheck eq(std::string name, SeriesT lhs, SeriesT rhs) {
  return {std::move(name), std::move(lhs), std::move(rhs), true};
}
IdentityCheck eq(std::string name, const UniSeries& lhs, const UniSeries& rhs) {
  return eq(std::move(name), lift(lhs), lift(rhs));
}
IdentityCheck eq(std::string name, const ScalarSeries& lhs, const ScalarSeries& rhs) {
  return eq(std::move(name), lift(lhs), lift(rhs));
}
IdentityCheck prefix(std::string name, const ScalarSeries& lhs, const ScalarSeries& rhs) {
  IdentityCheck c = eq(std::move(name), lhs, rhs);
  c.max_order = std::min(lhs.order(), rhs.order());
  return c;
}
IdentityCheck differs(std::string name, SeriesT lhs, SeriesT rhs) {
  return {std::move(name), std::move(lhs), std::move(rhs), false};
}

std::size_t work_order(std::size_t order) { return order + 2; }

const AlgebraicCatalog& catalog() { return AlgebraicCatalog::builtin(); }
UniSeries value_series(const std::string& id, std::size_t order) { return catalog().value(id).expr.evaluate(order); }

ScalarSeries relation_residual(const std::string& id, const ScalarSeries& w) {
  const std::size_t n = w.order();
  std::map<std::string, ScalarSeries> b{{"w", w}, {"t", t_pow(1, n)}};
  return catalog().relation(id).poly.evaluate<Rational>(b, n);
}

// ---------------------------------------------------------------- step-by-step equations

/// K C = start - t ybar h(x) C_-(xbar) - t xbar h(y) C_-(ybar) [- t xbar ybar C00].
IdentityCheck walk_equation(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const Lattice l = lattice_of(kind);
  const std::size_t n = d.order;
  const Point s = start_of(kind);
  SeriesT rhs = cst(mono(s.i, s.j), n);
  rhs = rhs - times_monomial(neg_x_axis(d.C).scaled(hx(l)), 0, -1).shifted(1) -
        times_monomial(neg_y_axis(d.C).scaled(hy(l)), -1, 0).shifted(1);
  if (l == Lattice::Diagonal) rhs = rhs - times_monomial(at00(d.C), -1, -1).shifted(1);
  return eq("step-by-step equation for C", kernel_series(l, n) * d.C, rhs);
}

/// K Q = 1 - t ybar h(x) Q(x,0) - t xbar h(y) Q(0,y) [+ t xbar ybar Q00].
IdentityCheck quadrant_equation(Lattice l, std::size_t order) {
  const Decomposition& d =
      decomposition(l == Lattice::Square ? ModelKind::SquareOrigin : ModelKind::DiagonalOrigin, work_order(order));
  const std::size_t n = d.order;
  SeriesT rhs = cst(LP(1), n) - times_monomial(row0(d.Q).scaled(hx(l)), 0, -1).shifted(1) -
                times_monomial(col0(d.Q).scaled(hy(l)), -1, 0).shifted(1);
  if (l == Lattice::Diagonal) rhs = rhs + times_monomial(at00(d.Q), -1, -1).shifted(1);
  return eq("quadrant step-by-step equation", kernel_series(l, n) * d.Q, rhs);
}

/// The equation for A: same shape as for C with a modified constant term.
IdentityCheck a_equation(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const Lattice l = lattice_of(kind);
  const std::size_t n = d.order;
  const Rational third(1, 3);
  LP constant = kind == ModelKind::DiagonalShifted ? (LP(1) + mono(-2, 0, 2) - mono(0, -2)) * LP(third)
                                                   : (LP(2) + mono(-2, 0) + mono(0, -2)) * LP(third);
  SeriesT rhs = cst(constant, n) - times_monomial(neg_x_axis(d.A).scaled(hx(l)), 0, -1).shifted(1) -
                times_monomial(neg_y_axis(d.A).scaled(hy(l)), -1, 0).shifted(1);
  if (l == Lattice::Diagonal) rhs = rhs - times_monomial(at00(d.A), -1, -1).shifted(1);
  return eq("equation for A", kernel_series(l, n) * d.A, rhs);
}

/// Support checks and the reassembly A = P + xbar L(xbar,y) + ybar B(x,ybar).
std::vector<IdentityCheck> split_checks(const Decomposition& d) {
  const SeriesT left = left_embed(d.L), below = below_embed(d.B);
  const SeriesT zero(d.order);
  return {
      eq("A = P + left part + lower part", d.A, d.P + left + below),
      eq("left part supported on i < 0, j >= 0",
         left - extract_part(extract_part(left, Var::X, Part::negative()), Var::Y, Part::nonneg()), zero),
      eq("lower part supported on i >= 0, j < 0",
         below - extract_part(extract_part(below, Var::X, Part::nonneg()), Var::Y, Part::negative()), zero),
      eq("A has no term negative in both x and y",
         extract_part(extract_part(d.A, Var::X, Part::negative()), Var::Y, Part::negative()), zero),
  };
}

/// K (2F - F(0,y)) = c x - 2 t ybar h(x) F(x,0) + t (x - xbar) h(y) F(0,y)
///                   + sign t (ybar on the square, 1 + ybar^2 on the
///                   diagonal) F(y,0) + boundary term.
SeriesT quadrant_like_lhs(Lattice l, const SeriesT& f) {
  return kernel_series(l, f.order()) * (f * Rational(2) - col0(f));
}

SeriesT quadrant_like_rhs(Lattice l, const SeriesT& f, const LP& constant, int sign, const SeriesT& boundary) {
  const std::size_t n = f.order();
  const LP x_minus = mono(1, 0) - mono(-1, 0);
  const LP swap_factor = l == Lattice::Square ? mono(0, -1) : LP(1) + mono(0, -2);
  SeriesT rhs = cst(constant, n) - times_monomial(row0(f).scaled(hx(l)), 0, -1).shifted(1) * Rational(2) +
                col0(f).scaled(x_minus * hy(l)).shifted(1) +
                swap_xy(row0(f)).scaled(swap_factor).shifted(1) * Rational(sign);
  return rhs + boundary;
}

// ---------------------------------------------------------------- square, origin

std::vector<IdentityCheck> eq_t(std::size_t n) { return {walk_equation(ModelKind::SquareOrigin, n)}; }
std::vector<IdentityCheck> eq_q(std::size_t n) { return {quadrant_equation(Lattice::Square, n)}; }

std::vector<IdentityCheck> orbit_q(Lattice l, std::size_t order) {
  const Decomposition& d =
      decomposition(l == Lattice::Square ? ModelKind::SquareOrigin : ModelKind::DiagonalOrigin, work_order(order));
  const SeriesT k = kernel_series(l, d.order);
  const SeriesT rational = cst(orbit_sum(), d.order) * inverse(k);
  return {
      eq("orbit equation for Q", k * orbit(d.Q), cst(orbit_sum(), d.order)),
      eq("x y Q is the positive part of the orbit quotient", times_monomial(d.Q, 1, 1),
         extract_part(extract_part(rational, Var::X, Part::positive()), Var::Y, Part::positive())),
  };
}

std::vector<IdentityCheck> orbit_c(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const SeriesT k = kernel_series(lattice_of(kind), d.order);
  Rational sign = kind == ModelKind::DiagonalShifted ? Rational(-1) : kind == ModelKind::SquareShifted ? Rational(0)
                                                                                                       : Rational(1);
  return {eq("orbit equation for C", k * orbit(d.C), cst(orbit_sum() * LP(sign), d.order))};
}

std::vector<IdentityCheck> eq_a(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const Rational third(1, 3);
  std::vector<IdentityCheck> out{a_equation(kind, order), eq("orbit sum of A vanishes", orbit(d.A), SeriesT(d.order))};
  if (kind == ModelKind::SquareOrigin || kind == ModelKind::DiagonalOrigin) {
    // C_-(xbar) = A_-(xbar) - xbar^2 Q(xbar, 0) / 3.
    SeriesT q_left = times_monomial(substitute_inverse(row0(d.Q), Var::X), -2, 0) * third;
    out.push_back(eq("negative axis of C from A and Q", neg_x_axis(d.C), neg_x_axis(d.A) - q_left));
  }
  return out;
}

std::vector<IdentityCheck> split_origin(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const Rational third(1, 3);
  const SeriesT& m = d.mixed();
  std::vector<IdentityCheck> out = split_checks(d);
  const SeriesT m0y = col0(m), m0x = swap_xy(m0y), myx = swap_xy(m);
  out.push_back(eq("x/y symmetry of the mixed parts", d.B, swap_xy(d.L)));
  out.push_back(eq("P from M", d.P, times_monomial(m - m0y, -1, 0) + times_monomial(myx - m0x, 0, -1)));
  out.push_back(eq("x y P from M, positive-part form", times_monomial(d.P, 1, 1),
                   times_monomial(m - m0y, 0, 1) + times_monomial(myx - m0x, 1, 0)));
  out.push_back(eq("first-quadrant part of C", quadrant_part(d.C), d.Q * third + d.P));
  out.push_back(eq("negative-abscissa part of C", extract_part(d.C, Var::X, Part::negative()),
                   left_embed(m) - times_monomial(substitute_inverse(d.Q, Var::X), -2, 0) * third));
  return out;
}

std::vector<IdentityCheck> func_m(ModelKind kind, std::size_t order) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const Lattice l = lattice_of(kind);
  const SeriesT& m = d.mixed();
  SeriesT boundary(d.order);
  if (l == Lattice::Diagonal) boundary = -times_monomial(lift(coefficient(m, 1, 0)), 0, -1).shifted(1);
  return {eq("quadrant-like equation for M", quadrant_like_lhs(l, m),
             quadrant_like_rhs(l, m, mono(1, 0, Rational(2, 3)), 1, boundary))};
}

/// Univariate data for the kernel, R/S and factor identities.
struct Slices {
  std::size_t order;
  UniSeries mx0;  // M(x,0)
  UniSeries m0x;  // M(0,x)
};

Slices slices(ModelKind kind, std::size_t order, bool second = false) {
  const Decomposition& d = decomposition(kind, work_order(order));
  const SeriesT& f = second ? d.N : (kind == ModelKind::SquareOrigin || kind == ModelKind::DiagonalOrigin ? d.mixed() : d.M);
  return {d.order, at_y_zero(f), at_x_zero(f)};
}

std::vector<IdentityCheck> kernel_cancel_square(std::size_t order) {
  const Slices s = slices(ModelKind::SquareOrigin, order);
  const std::size_t n = s.order;
  const UniSeries Y = kernel_root_Y(Lattice::Square, n);
  const UniSeries m0Y = compose(s.m0x, Y), mY0 = compose(s.mx0, Y);
  const UniSeries mxb0 = substitute_inverse(s.mx0), m0xb = substitute_inverse(s.m0x);
  const UniSeries YY = Y * Y, one = ucst(LP1(1), n);
  const LP1 x = xpow(1), xb = xpow(-1), third(Rational(1, 3));
  const UniSeries zero(n);
  auto T = [](const UniSeries& a) { return a.shifted(1); };
  return {
      eq("Y cancels the kernel", kernel_times_y(Lattice::Square, Y), zero),
      eq("kernel root in the equation for M, times Y",
         Y.scaled(x * LP1(Rational(2, 3))) - T(s.mx0) * Rational(2) + T((Y * m0Y).scaled(x - xb)) + T(mY0), zero),
      eq("same after x -> 1/x, times Y",
         Y.scaled(xb * LP1(Rational(2, 3))) - T(mxb0) * Rational(2) + T((Y * m0Y).scaled(xb - x)) + T(mY0), zero),
      eq("kernel root after swapping x and y, times Y",
         YY.scaled(LP1(2) * third) - T((Y * mY0).scaled(xb)) * Rational(2) + T((YY - one) * s.m0x) +
             T((Y * s.mx0).scaled(xb)),
         zero),
      eq("same after x -> 1/x, times Y",
         YY.scaled(LP1(2) * third) - T((Y * mY0).scaled(x)) * Rational(2) + T((YY - one) * m0xb) +
             T((Y * mxb0).scaled(x)),
         zero),
      eq("elimination of M(0,Y) and M(Y,0), times t Y",
         T((YY - one) * (s.m0x.scaled(x) - m0xb.scaled(xb) * Rational(2))) - YY.scaled(xb) * Rational(2) +
             T(Y * s.mx0) * Rational(3),
         zero),
  };
}

UniSeries delta_square(std::size_t n) {
  const LP1 s = xpow(1) + xpow(-1);
  return laurent_series({LP1(1), -(s * LP1(2)), s * s - LP1(4)}, n);
}

/// (x + 1)(1/x + 1) form used on the diagonal lattice: 1 - c t^k (2 + x + 1/x).
UniSeries delta_diagonal(std::size_t n, std::size_t t_power = 2) {
  UniSeries out = ucst(LP1(1), n);
  out = out - ucst(LP1(2) + xpow(1) + xpow(-1), n).shifted(t_power) * Rational(4);
  return out.truncated(n);
}

/// R, S and the series in t they determine, for the square lattice.
struct SquareRS {
  std::size_t n;
  UniSeries R, S, Sb, delta;
  ScalarSeries S1, S2, R0, R1, P0, F0, F1, F2;
};

SquareRS square_rs(std::size_t order) {
  const Slices s = slices(ModelKind::SquareOrigin, order);
  SquareRS r;
  r.n = s.order;
  r.R = s.mx0.shifted(1).truncated(r.n);
  r.S = times_monomial(s.m0x, 1).shifted(1).truncated(r.n);
  r.Sb = substitute_inverse(r.S);
  r.delta = delta_square(r.n);
  r.S1 = coefficient(r.S, 1);
  r.S2 = coefficient(r.S, 2);
  r.R0 = coefficient(r.R, 0);
  r.R1 = coefficient(r.R, 1);
  r.P0 = coefficient(r.delta * r.S * r.Sb, 0);
  const ScalarSeries one = scst(1, r.n);
  r.F0 = (r.S1 * (one + r.S1)).shifted(2).truncated(r.n);
  r.F1 = ((r.S2 + r.R1 * Rational(3)).shifted(1) - r.S1 * Rational(5)).shifted(1).truncated(r.n) * Rational(1, 2);
  r.F2 = (one + r.S1 * Rational(2)).shifted(2).truncated(r.n);
  return r;
}

/// 2F0 - P0 + (x + 1/x) F1 + (x^2 + 1/x^2) F2.
UniSeries square_cat_rhs(const SquareRS& r) {
  return uni(r.F0 * Rational(2) - r.P0) + uni(r.F1).scaled(xpow(1) + xpow(-1)) +
         uni(r.F2).scaled(xpow(2) + xpow(-2));
}

std::vector<IdentityCheck> rs_square(std::size_t order) {
  const SquareRS r = square_rs(order);
  const std::size_t n = r.n;
  const LP1 x = xpow(1), xb = xpow(-1);
  const UniSeries sq = sqrt(r.delta);
  const UniSeries lhs_rs = sq * (r.S - r.Sb * Rational(2) - ucst(xb, n)) + ucst(xb, n) -
                           ucst(LP1(1) + xpow(-2), n).shifted(1);
  const UniSeries prod = r.delta * r.S * r.Sb;
  const UniSeries rhs = square_cat_rhs(r);
  const UniSeries lhs_cat = r.delta * (r.S * r.S + r.Sb * r.Sb - r.S * r.Sb + r.S.scaled(x) + r.Sb.scaled(xb));
  std::vector<IdentityCheck> out{
      eq("R/S relation with the square root of the discriminant", lhs_rs, r.R.shifted(1) * Rational(3)),
      eq("negative part of the squared relation",
         r.delta * (r.Sb * r.Sb + r.Sb.scaled(xb)) - extract_part(prod, Part::negative()),
         uni(r.F0) + uni(r.F1).scaled(xb) + uni(r.F2).scaled(xpow(-2))),
      eq("F1 = -2 t S1", r.F1, (r.S1 * Rational(-2)).shifted(1)),
      eq("R0 = S1", r.R0, r.S1),
      eq("equation between S(x) and S(1/x)", lhs_cat, rhs),
      eq("S1 closed form", uni(r.S1), value_series("S1", n)),
      eq("P0 closed form", uni(r.P0), value_series("P0_SQ", n)),
      eq("t^2 M01 closed form", uni(r.S2).shifted(1), value_series("TM01_SQ", n)),
  };
  // Neither factor of the discriminant divides the right-hand side: the
  // quotient has x-degree growing with the order.
  for (int shift : {2, -2}) {
    const UniSeries factor = ucst(LP1(1), n) - ucst(x + xb + LP1(shift), n).shifted(1);
    const UniSeries q = rhs * inverse(factor);
    const SeriesT bounded = lift(q.map([](const LP1& p) {
      LP1 o;
      if (p.is_zero()) return o;
      for (int e = std::max(p.low(), -1); e <= std::min(p.high(), 1); ++e) o += LP1::monomial(p.coeff(e), e);
      return o;
    }));
    out.push_back(differs(std::string("right side not divisible by 1 - t(x + 1/x ") + (shift > 0 ? "+" : "-") +
                              " 2)",
                          lift(q), bounded));
  }
  return out;
}

/// (2t^2 S1^2 + 2t(t x^2 + t/x^2 - x - 1/x + t) S1 - P0 + t^2 (x^2 + 1/x^2)).
UniSeries square_bracket(const SquareRS& r) {
  const std::size_t n = r.n;
  const LP1 s2 = xpow(2) + xpow(-2), s1 = xpow(1) + xpow(-1);
  UniSeries b = uni(r.S1 * r.S1).shifted(2) * Rational(2);
  b = b + (uni(r.S1).scaled(s2 + LP1(1)).shifted(2) - uni(r.S1).scaled(s1).shifted(1)) * Rational(2);
  b = b - uni(r.P0) + ucst(s2, n).shifted(2);
  return b.truncated(n);
}

std::vector<IdentityCheck> cubic_square(std::size_t order) {
  const SquareRS r = square_rs(order);
  const std::size_t n = r.n;
  const LP1 x = xpow(1), xb = xpow(-1);
  const ScalarSeries one = scst(1, n);
  const UniSeries lhs = r.delta * (r.S * r.S * r.S + (r.S * r.S).scaled(x * LP1(2) + xb) + r.S.scaled(x * (x + xb)));
  const UniSeries rhs = uni((one + r.S1) * (one + r.S1)).scaled(x - xb).shifted(2) +
                        square_bracket(r) * (r.S + ucst(x, n));
  return {
      eq("cubic equation for S", lhs, rhs),
      eq("S1 satisfies its quartic", relation_residual("S1_QUARTIC", r.S1), ScalarSeries(n)),
      eq("P0 satisfies its quartic", relation_residual("P0_QUARTIC", r.P0), ScalarSeries(n)),
  };
}

template <class C>
Series<C> promote(const ScalarSeries& s) {
  return s.map([](const Rational& r) { return C(r); });
}

std::vector<IdentityCheck> fact_square(std::size_t order) {
  const SquareRS r = square_rs(order);
  const std::size_t n = r.n;
  const ScalarSeries one = scst(1, n), t = t_pow(1, n);
  const ScalarSeries X = series_X0(n);
  const ScalarSeries W = scst(Rational(1, 2), n) - (X).shifted(1).truncated(n);  // t / X
  const ScalarSeries delta = scst(Rational(1, 4), n) - t_pow(2, n) * Rational(4);
  const ScalarSeries SX = compose(r.S, X);
  const ScalarSeries SxX = compose(r.S.map([](const LP1& p) { return p.shifted(-1); }), X);  // S(X) / X
  const ScalarSeries XX = X * X;
  const ScalarSeries bracket = (r.S1 * r.S1).shifted(2) * Rational(2) +
                               ((XX + one).shifted(2) + W * W - X.shifted(1) - W) * r.S1 * Rational(2) - r.P0 +
                               XX.shifted(2) + W * W;
  std::vector<IdentityCheck> out{
      eq("X0 = 2t (X0^2 + 1)", X, (XX + one).shifted(1) * Rational(2)),
      prefix("X0 leading terms", X.truncated(std::min<std::size_t>(n, 11)),
         ScalarSeries::polynomial({0, 2, 0, 8, 0, 64, 0, 640, 0, 7168, 0}, std::min<std::size_t>(n, 11))),
      eq("X0 cancels the x0-derivative", delta * (SX * SX * Rational(3) + X * SX * Rational(4) + SxX * Rational(2) + XX + one),
         bracket),
      eq("X0 cancels the cubic", delta * (SX * SX * SX + X * SX * SX * Rational(2) + SxX * SX + (XX + one) * SX),
         (X.shifted(2) - W.shifted(1)) * (one + r.S1) * (one + r.S1) + bracket * (SX + X)),
  };

  // X1, X2 with constant terms +i and -i.
  using G = GaussRational;
  using GS = Series<G>;
  const UniSeries S = r.S;
  const GS S1 = promote<G>(r.S1), P0 = promote<G>(r.P0);
  auto pieces = [&](const GS& x) { return std::pair{inverse(x), compose(S, x)}; };
  // Vanishing derivative of the cubic in S at x = X, for general X.
  auto residual = [&](const GS& x) {
    const std::size_t m = x.order();
    auto [xb, sx] = pieces(x);
    const GS one = GS::constant(G(1), m), s = x + xb, x2 = x * x + xb * xb;
    const GS dl = (one - s.shifted(1)) * (one - s.shifted(1)) - GS::monomial(G(4), 2, m);
    const GS lhs = dl * (sx * sx * Rational(3) + (x * Rational(4) + xb * Rational(2)) * sx + x * x + one);
    const GS rhs = (S1 * S1).shifted(2) * Rational(2) + ((x2 + one).shifted(2) - s.shifted(1)) * S1 * Rational(2) -
                   P0 + x2.shifted(2);
    return (lhs - rhs).truncated(m);
  };
  for (int sign : {1, -1}) {
    const std::string tag = sign > 0 ? "X1" : "X2";
    GS x = solve_implicit<G>(residual, G(0, sign), n);
    auto [xb, sx] = pieces(x);
    GS s = x + xb, dd = (x - xb) * (x - xb);
    GS f3 = s + dd.shifted(1) * S1 + sx * (sx + s) * (s - dd.shifted(1));
    f3 = f3.truncated(n);
    out.push_back(eq(tag + " real part of the third factor", f3.map([](const G& g) { return g.re; }), ScalarSeries(n)));
    out.push_back(eq(tag + " imaginary part of the third factor", f3.map([](const G& g) { return g.im; }),
                     ScalarSeries(n)));
    const std::size_t k = std::min<std::size_t>(n, 8);
    Rational si(sign);
    GS expected = GS::polynomial({G(0, si), G(0), G(0), G(2), G(0), G(16), G(0, -2 * si), G(156)}, k);
    out.push_back(prefix(tag + " leading terms, real part", x.truncated(k).map([](const G& g) { return g.re; }),
                     expected.map([](const G& g) { return g.re; })));
    out.push_back(prefix(tag + " leading terms, imaginary part", x.truncated(k).map([](const G& g) { return g.im; }),
                     expected.map([](const G& g) { return g.im; })));
  }
  return out;
}

// ---------------------------------------------------------------- diagonal, origin

std::vector<IdentityCheck> kernel_cancel_diag(std::size_t order) {
  const Decomposition& d = decomposition(ModelKind::DiagonalOrigin, work_order(order));
  const Slices s = slices(ModelKind::DiagonalOrigin, order);
  const std::size_t n = s.order;
  const UniSeries Y = kernel_root_Y(Lattice::Diagonal, n);
  const UniSeries m0Y = compose(s.m0x, Y), mY0 = compose(s.mx0, Y);
  const UniSeries m0xb = substitute_inverse(s.m0x);
  const UniSeries YY = Y * Y, one = ucst(LP1(1), n);
  const UniSeries m10 = uni(coefficient(d.mixed(), 1, 0));
  const LP1 x = xpow(1), xb = xpow(-1), h = x + xb;
  const UniSeries zero(n);
  auto T = [](const UniSeries& a) { return a.shifted(1); };
  return {
      eq("Y cancels the kernel", kernel_times_y(Lattice::Diagonal, Y), zero),
      eq("kernel root in the equation for M, times Y^2",
         YY.scaled(x * LP1(Rational(2, 3))) - T((Y * s.mx0).scaled(h)) * Rational(2) +
             T((YY * Y + Y) * m0Y).scaled(x - xb) + T((YY + one) * mY0) - T(Y * m10),
         zero),
      eq("elimination of M(0,Y) and M(Y,0), times t Y",
         T((YY - one) * (s.m0x.scaled(x) - m0xb.scaled(xb) * Rational(2))).scaled(h) - YY.scaled(xb) * Rational(2) +
             T(Y * s.mx0).scaled(h) * Rational(3) + T(Y * m10) * Rational(3),
         zero),
  };
}

struct DiagRS {
  std::size_t n;
  UniSeries R, S, Sb, delta;
  ScalarSeries S1, R0, Sm1, P0, F0;
};

/// R(x) = t^2 x^(-1/2) F(sqrt x, 0), S(x) = t sqrt(x) F(0, sqrt x).
DiagRS diag_rs(ModelKind kind, std::size_t order, bool second = false, std::size_t delta_t_power = 2) {
  const Slices s = slices(kind, order, second);
  DiagRS r;
  r.n = s.order;
  r.R = substitute_sqrt(s.mx0, -1).shifted(2).truncated(r.n);
  r.S = substitute_sqrt(s.m0x, 1).shifted(1).truncated(r.n);
  r.Sb = substitute_inverse(r.S);
  r.delta = delta_diagonal(r.n, delta_t_power);
  r.S1 = coefficient(r.S, 1);
  r.R0 = coefficient(r.R, 0);
  r.Sm1 = evaluate_at(r.S, Rational(-1));
  r.P0 = coefficient(r.delta * r.S * r.Sb, 0);
  r.F0 = r.P0 - r.Sm1;
  return r;
}

std::vector<IdentityCheck> rs_diag(std::size_t order) {
  const DiagRS r = diag_rs(ModelKind::DiagonalOrigin, order);
  const std::size_t n = r.n;
  const LP1 x = xpow(1), xb = xpow(-1), xp1 = x + LP1(1);
  const UniSeries one = ucst(LP1(1), n);
  const UniSeries prod = r.delta * r.S * r.Sb;
  return {
      eq("R/S relation with the square root of the discriminant, times (1 + x)",
         sqrt(r.delta) * (r.S.scaled(xp1) - r.Sb.scaled(xp1) * Rational(2) - one),
         r.R.scaled(xp1 * xp1) * Rational(3) + uni(r.R0).scaled(xp1) * Rational(3) - one),
      eq("3 R0 + S(-1) = 0", r.R0 * Rational(3) + r.Sm1, ScalarSeries(n)),
      eq("negative part of the squared relation, times (1 + x)",
         r.delta * ((r.Sb * r.Sb).scaled(xp1) + r.Sb) - extract_part(prod, Part::negative()).scaled(xp1),
         ucst(LP1(1) + xb, n).shifted(2) + uni(r.Sm1)),
      eq("equation between S(x) and S(1/x), times (1 + x)",
         r.delta * ((r.S * r.S + r.Sb * r.Sb - r.S * r.Sb).scaled(xp1) + r.S.scaled(x) + r.Sb),
         (uni(r.Sm1 - r.P0) + ucst(x + xb, n).shifted(2)).scaled(xp1)),
      eq("P0 + S(-1)^2 = 2 t^2 S1", r.P0 + r.Sm1 * r.Sm1, (r.S1 * Rational(2)).shifted(2)),
      eq("S1 closed form", uni(r.S1), value_series("S1", n)),
      eq("R0 closed form", uni(r.R0), value_series("R0_DIAG", n)),
      eq("F0 closed form", uni(r.F0), value_series("F0_DIAG", n)),
  };
}

std::vector<IdentityCheck> cubic_diag(std::size_t order) {
  const DiagRS r = diag_rs(ModelKind::DiagonalOrigin, order);
  const std::size_t n = r.n;
  const LP1 x = xpow(1), xb = xpow(-1), xp1 = x + LP1(1);
  const UniSeries one = ucst(LP1(1), n);
  const UniSeries S = r.S;
  const UniSeries lhs = r.delta * ((S * S * S).scaled(xp1) + (S * S).scaled(x * LP1(2) + LP1(1)) + S.scaled(x));
  const UniSeries a = ucst(x + xb, n).shifted(2) - uni(r.F0);
  const UniSeries rhs = (a * (S + one)).scaled(xp1) + uni(r.S1).shifted(2).scaled(xp1) -
                        (uni(r.S1 * Rational(2)).shifted(2) - uni(r.F0)) - ucst(LP1(1) + xb, n).shifted(2);
  return {
      eq("cubic equation for S, times (1 + x)", lhs, rhs.truncated(n)),
      eq("S1 satisfies its quartic", relation_residual("S1_QUARTIC", r.S1), ScalarSeries(n)),
      eq("F0 satisfies its quartic", relation_residual("F0_QUARTIC", r.F0), ScalarSeries(n)),
  };
}

/// (1 - 2t - sqrt(1 - 4t)) / (2t) for sign = +1 and -(1 + 2t - sqrt(1 + 4t)) / (2t) for sign = -1.
ScalarSeries diag_root(int sign, std::size_t n) {
  const ScalarSeries one = scst(1, n + 1);
  ScalarSeries root = sqrt(one - t_pow(1, n + 1) * Rational(4 * sign));
  ScalarSeries num = one - t_pow(1, n + 1) * Rational(2 * sign) - root;
  return (num.unshifted(1) * Rational(sign, 2)).truncated(n);
}

std::vector<IdentityCheck> fact_diag(std::size_t order) {
  const DiagRS r = diag_rs(ModelKind::DiagonalOrigin, order);
  const std::size_t n = r.n;
  const ScalarSeries one = scst(1, n);
  std::vector<IdentityCheck> out;
  for (int sign : {1, -1}) {
    const std::string tag = sign > 0 ? "X0" : "X1";
    const ScalarSeries X = diag_root(sign, n);
    // t(X + 1/X) = sign (1 - 2 sign t) on the two factors.
    const ScalarSeries ts = (one - t_pow(1, n) * Rational(2 * sign)) * Rational(sign);
    const ScalarSeries delta = one - t_pow(1, n) * Rational(4 * sign);
    const ScalarSeries t2s = ts.shifted(1).truncated(n);        // t^2 (X + 1/X)
    const ScalarSeries t2xb = (ts - X.shifted(1)).shifted(1).truncated(n);  // t^2 / X
    const ScalarSeries SX = compose(r.S, X);
    const ScalarSeries Xp1 = X + one;
    out.push_back(eq(tag + " satisfies its factor", X.shifted(1) * X - ts * X + t_pow(1, n),
                     ScalarSeries(n)));
    out.push_back(eq(tag + " cancels the x0-derivative, times (x + 1)",
                     delta * (Xp1 * SX * SX * Rational(3) + (X * Rational(2) + one) * SX * Rational(2) + X),
                     Xp1 * (t2s - r.F0)));
    out.push_back(eq(tag + " cancels the cubic, times (x + 1)",
                     delta * (Xp1 * SX * SX * SX + (X * Rational(2) + one) * SX * SX + X * SX),
                     Xp1 * (t2s - r.F0) * (SX + one) + (Xp1 * r.S1).shifted(2) - (r.S1 * Rational(2)).shifted(2) +
                         r.F0 - t_pow(2, n) - t2xb));
  }
  return out;
}

// ---------------------------------------------------------------- shifted starts

std::vector<IdentityCheck> asym_square(std::size_t order) {
  const ModelKind kind = ModelKind::SquareShifted;
  const Decomposition& d = decomposition(kind, work_order(order));
  const std::size_t n = d.order;
  const Lattice l = Lattice::Square;
  const SeriesT k = kernel_series(l, n);
  const SeriesT L00 = at00(d.L), B00 = at00(d.B);
  std::vector<IdentityCheck> out{walk_equation(kind, order),
                                 eq("orbit sum of C vanishes", orbit(d.C), SeriesT(n))};
  for (auto& c : split_checks(d)) out.push_back(std::move(c));
  out.push_back(eq("P from L and B", d.P,
                   times_monomial(d.L - col0(d.L), -1, 0) + times_monomial(d.B - row0(d.B), 0, -1)));
  const LP yb = mono(0, -1), xb = mono(-1, 0);
  out.push_back(eq("equation for L", k * (d.L * Rational(2) - col0(d.L)),
                   cst(LP(1), n) - row0(d.L).scaled(yb).shifted(1) * Rational(2) +
                       col0(d.L).scaled(mono(1, 0) - xb).shifted(1) + col0(d.B).scaled(yb).shifted(1) +
                       (L00 - B00).scaled(yb).shifted(1)));
  out.push_back(eq("equation for B", k * (d.B * Rational(2) - row0(d.B)),
                   row0(d.B).scaled(mono(0, 1) - yb).shifted(1) - col0(d.B).scaled(xb).shifted(1) * Rational(2) +
                       row0(d.L).scaled(xb).shifted(1) - (L00 - B00).scaled(xb).shifted(1)));
  out.push_back(eq("decoupled equation for M", quadrant_like_lhs(l, d.M),
                   quadrant_like_rhs(l, d.M, LP(1), 1, SeriesT(n))));
  out.push_back(eq("decoupled equation for N", quadrant_like_lhs(l, d.N),
                   quadrant_like_rhs(l, d.N, LP(1), -1, at00(d.N).scaled(yb).shifted(1) * Rational(2))));
  return out;
}

std::vector<IdentityCheck> asym_diag(std::size_t order) {
  const ModelKind kind = ModelKind::DiagonalShifted;
  const Decomposition& d = decomposition(kind, work_order(order));
  const std::size_t n = d.order;
  const Lattice l = Lattice::Diagonal;
  const SeriesT k = kernel_series(l, n);
  const Rational third(1, 3);
  const LP x = mono(1, 0), xb = mono(-1, 0), y = mono(0, 1), yb = mono(0, -1);
  std::vector<IdentityCheck> out{walk_equation(kind, order), a_equation(kind, order),
                                 eq("orbit sum of A vanishes", orbit(d.A), SeriesT(n))};
  for (auto& c : orbit_c(kind, order)) out.push_back(std::move(c));
  for (auto& c : split_checks(d)) out.push_back(std::move(c));
  out.push_back(eq("first-quadrant part of C", quadrant_part(d.C), d.P - d.Q * third));
  out.push_back(eq("negative-abscissa part of C", extract_part(d.C, Var::X, Part::negative()),
                   left_embed(d.L) + times_monomial(substitute_inverse(d.Q, Var::X), -2, 0) * third));
  out.push_back(eq("negative-ordinate part of C", extract_part(d.C, Var::Y, Part::negative()),
                   below_embed(d.B) + times_monomial(substitute_inverse(d.Q, Var::Y), 0, -2) * third));
  out.push_back(eq("P from L and B", d.P,
                   times_monomial(d.L - col0(d.L), -1, 0) + times_monomial(d.B - row0(d.B), 0, -1)));
  const SeriesT B01 = lift(coefficient(d.B, 0, 1)), L10 = lift(coefficient(d.L, 1, 0));
  out.push_back(eq("equation for L", k * (d.L * Rational(2) - col0(d.L)),
                   cst(x * LP(Rational(4, 3)), n) - row0(d.L).scaled(yb * (x + xb)).shifted(1) * Rational(2) +
                       col0(d.L).scaled((x - xb) * (y + yb)).shifted(1) +
                       col0(d.B).scaled(LP(1) + mono(0, -2)).shifted(1) - B01.scaled(yb).shifted(1)));
  out.push_back(eq("equation for B", k * (d.B * Rational(2) - row0(d.B)),
                   cst(y * LP(Rational(-2, 3)), n) + row0(d.B).scaled((x + xb) * (y - yb)).shifted(1) -
                       col0(d.B).scaled(xb * (y + yb)).shifted(1) * Rational(2) +
                       row0(d.L).scaled(LP(1) + mono(-2, 0)).shifted(1) - L10.scaled(xb).shifted(1)));
  out.push_back(eq("decoupled equation for M", quadrant_like_lhs(l, d.M),
                   quadrant_like_rhs(l, d.M, x * LP(Rational(2, 3)), 1,
                                     -lift(coefficient(d.M, 1, 0)).scaled(yb).shifted(1))));
  out.push_back(eq("decoupled equation for N", quadrant_like_lhs(l, d.N),
                   quadrant_like_rhs(l, d.N, x * LP(2), -1, lift(coefficient(d.N, 1, 0)).scaled(yb).shifted(1))));

  // Cubic equation for S(x) = t sqrt(x) N(0, sqrt x), written times (x + 1).
  const DiagRS r = diag_rs(kind, order, true);
  const UniSeries S = r.S;
  const LP1 ux = xpow(1), uxb = xpow(-1), xp1 = ux + LP1(1);
  const ScalarSeries F0 = r.P0 - r.Sm1 * Rational(3);
  const UniSeries lin = uni(r.S1 * Rational(16)).shifted(2) - uni(F0) + ucst(ux + uxb, r.n).shifted(2);
  const UniSeries pol = r.delta * ((S * S * S).scaled(xp1) - S * S * Rational(3) + S.scaled(LP1(2) - ux)) -
                        (lin * S).scaled(xp1) +
                        (uni(r.S1 * Rational(7)).shifted(2) - uni(F0) + ucst(ux, r.n).shifted(2)).scaled(xp1) + uni(F0) +
                        uni(r.S1 * Rational(2)).shifted(2);
  out.push_back(eq("cubic equation for the N series, times (x + 1)", pol.truncated(r.n), UniSeries(r.n)));
  // Roots of the x0-derivative: X0 = 2 + O(t^2) and X1 = t^2 Y with Y(0) = 9/2.
  const std::size_t m = r.n;
  auto derivative = [&](const ScalarSeries& X, const ScalarSeries& t2xb) {
    const std::size_t k = std::min(X.order(), t2xb.order());
    const ScalarSeries one = scst(1, k), sx = compose(S, X);
    const ScalarSeries dl = one - (scst(2, k) + X).shifted(2) * Rational(4) - t2xb * Rational(4);
    const ScalarSeries inner = (X + one) * sx * sx * Rational(3) - sx * Rational(6) + scst(2, k) - X;
    return (dl * inner - (X + one) * ((r.S1 * Rational(16)).shifted(2) - F0 + t2xb + X.shifted(2))).truncated(k);
  };
  const ScalarSeries X0 = solve_implicit<Rational>(
      [&](const ScalarSeries& X) { return derivative(X, (inverse(X).shifted(2)).truncated(X.order())); }, Rational(2), m);
  const ScalarSeries Y1 = solve_implicit<Rational>(
      [&](const ScalarSeries& Y) { return derivative(Y.shifted(2).truncated(Y.order()), inverse(Y)); }, Rational(9, 2),
      m);
  const std::size_t k0 = std::min<std::size_t>(m, 5), k1 = std::min<std::size_t>(m, 7);
  const Rational z(0);
  out.push_back(prefix("X0 leading terms for the N series", X0.truncated(k0),
                       ScalarSeries::polynomial({Rational(2), z, Rational(-21, 2), z, Rational(-117, 8)}, k0)));
  out.push_back(prefix("X1 leading terms for the N series", Y1.shifted(2).truncated(k1),
                       ScalarSeries::polynomial({z, z, Rational(9, 2), z, Rational(261, 8), z, Rational(5067, 16)}, k1)));
  out.push_back(eq("S1 closed form for the N series", uni(r.S1), value_series("S1_N_DIAG", r.n)));
  out.push_back(eq("F0 closed form for the N series", uni(F0), value_series("F0_N_DIAG", r.n)));
  // The discriminant needs t^2: with 4t (1 + x)(1 + 1/x) the F0 value is off.
  const DiagRS wrong = diag_rs(kind, order, true, 1);
  out.push_back(differs("F0 with a first-power discriminant differs",
                        lift(uni(wrong.P0 - wrong.Sm1 * Rational(3))), lift(value_series("F0_N_DIAG", r.n))));
  return out;
}

std::vector<IdentityCase> build_catalog() {
  using K = ModelKind;
  std::vector<IdentityCase> c;
  auto add = [&](std::string id, std::string anchor, bool heavy, std::function<std::vector<IdentityCheck>(std::size_t)> f) {
    c.push_back({std::move(id), std::move(anchor), heavy, std::move(f)});
  };
  add("EQ_T", "square, origin: K C = 1 - t ybar C_-(xbar) - t xbar C_-(ybar)", false, eq_t);
  add("EQ_Q", "square quadrant: K Q = 1 - t ybar Q(x,0) - t xbar Q(0,y)", false, eq_q);
  add("ORBIT_Q", "square quadrant: orbit equation; x y Q is the positive part of (x-xbar)(y-ybar)/K", false,
      [](std::size_t n) { return orbit_q(Lattice::Square, n); });
  add("ORBIT_C", "square, origin: K times the orbit sum of C is (x-xbar)(y-ybar)", false,
      [](std::size_t n) { return orbit_c(K::SquareOrigin, n); });
  add("EQ_A", "square, origin: equation for A = C - (Q - xbar^2 Q(xbar,y) - ybar^2 Q(x,ybar))/3; zero orbit sum",
      false, [](std::size_t n) { return eq_a(K::SquareOrigin, n); });
  add("SPLIT_SQ", "square, origin: C = Q/3 + P + (xbar M(xbar,y) - xbar^2 Q(xbar,y)/3) + ...; P from M", false,
      [](std::size_t n) { return split_origin(K::SquareOrigin, n); });
  add("FUNC_M_SQ", "square, origin: K (2M - M(0,y)) = 2x/3 - 2t ybar M(x,0) + t(x-xbar) M(0,y) + t ybar M(y,0)",
      false, [](std::size_t n) { return func_m(K::SquareOrigin, n); });
  add("KERNEL_CANCEL_SQ", "square, origin: equations at y = Y and the elimination giving M(x,0)", true,
      kernel_cancel_square);
  add("RS_SQ", "square, origin: R = t M(x,0), S = t x M(0,x); relation with sqrt(Delta); F0, F1, F2; P0", false,
      rs_square);
  add("CUBIC_S_SQ", "square, origin: cubic equation for S(x) = t x M(0,x); quartics for S1 and P0", false,
      cubic_square);
  add("FACT_SQ", "square, origin: X0 = (1 - sqrt(1 - 16t^2))/(4t) and X1, X2 = +-i + ... cancel the factored system",
      true, fact_square);
  add("DIAG_EQ_T", "diagonal, origin: K C = 1 - t ybar (x+xbar) C_-(xbar) - t xbar (y+ybar) C_-(ybar) - t xbar ybar C00",
      false, [](std::size_t n) { return std::vector<IdentityCheck>{walk_equation(K::DiagonalOrigin, n)}; });
  add("DIAG_EQ_Q", "diagonal quadrant: step-by-step equation", false,
      [](std::size_t n) { return std::vector<IdentityCheck>{quadrant_equation(Lattice::Diagonal, n)}; });
  add("DIAG_ORBIT", "diagonal, origin: orbit equations for Q and C", false, [](std::size_t n) {
    auto out = orbit_q(Lattice::Diagonal, n);
    for (auto& x : orbit_c(K::DiagonalOrigin, n)) out.push_back(std::move(x));
    return out;
  });
  add("DIAG_EQ_A", "diagonal, origin: equation for A; zero orbit sum", false,
      [](std::size_t n) { return eq_a(K::DiagonalOrigin, n); });
  add("DIAG_SPLIT", "diagonal, origin: three-quadrant split and P from M", false,
      [](std::size_t n) { return split_origin(K::DiagonalOrigin, n); });
  add("DIAG_FUNC_M", "diagonal, origin: quadrant-like equation for M with the M10 term", false,
      [](std::size_t n) { return func_m(K::DiagonalOrigin, n); });
  add("DIAG_KERNEL_CANCEL", "diagonal, origin: equation at y = Y and the elimination giving M(x,0)", true,
      kernel_cancel_diag);
  add("DIAG_RS", "diagonal, origin: R = t^2 x^(-1/2) M(sqrt x,0), S = t sqrt(x) M(0,sqrt x); 3 R0 + S(-1) = 0",
      false, rs_diag);
  add("DIAG_CUBIC_S", "diagonal, origin: cubic equation for S; quartics for S1 and F0", false, cubic_diag);
  add("DIAG_FACT", "diagonal, origin: X0, X1 = (1 -+ 2t -+ sqrt(1 -+ 4t))/(+-2t) cancel the factored system", true,
      fact_diag);
  add("ASYM_SQ", "square, start (-1,0): equation for C, zero orbit sum, P from L and B, equations for L, B, M, N",
      false, asym_square);
  add("ASYM_DIAG",
      "diagonal, start (-2,0): equations for C and A, P from L and B, equations for L, B, M, N; cubic for the N series",
      false, asym_diag);
  return c;
}

std::string coeff_text(const SeriesT& s, std::size_t t, int i, int j) {
  return t < s.order() ? s[t].coeff(i, j).get_str() : std::string("?");
}

}  // namespace

const std::vector<IdentityCase>& identity_catalog() {
  static const std::vector<IdentityCase> catalog = build_catalog();
  return catalog;
}

const IdentityCase& identity_case(const std::string& id) {
  for (const auto& c : identity_catalog())
    if (c.id == id) return c;
  throw std::out_of_range("unknown identity id '" + id + "'");
}

std::optional<FirstFailure> compare(const IdentityCheck& check, std::size_t order) {
  order = std::min(order, check.max_order);
  if (check.lhs.order() < order || check.rhs.order() < order)
    throw std::logic_error("identity '" + check.name + "' assembled below the requested order");
  const SeriesT diff = check.lhs.truncated(order) - check.rhs.truncated(order);
  for (std::size_t t = 0; t < order; ++t) {
    if (diff[t].is_zero()) continue;
    if (!check.expect_equal) return std::nullopt;
    const auto& [e, c] = *diff[t].terms().begin();
    return FirstFailure{check.name, t, e.first, e.second, coeff_text(check.lhs, t, e.first, e.second),
                        coeff_text(check.rhs, t, e.first, e.second)};
  }
  if (check.expect_equal) return std::nullopt;
  return FirstFailure{check.name, order, 0, 0, "equal", "expected a difference below the order"};
}

Verdict verify(const IdentityCase& c, std::size_t order) {
  Verdict v;
  v.id = c.id;
  v.anchor = c.anchor;
  v.order_checked = order;
  try {
    const auto checks = c.builder(order);
    v.checks = checks.size();
    for (const auto& check : checks) {
      if (auto f = compare(check, order)) {
        v.failure = std::move(f);
        break;
      }
    }
  } catch (const std::exception& e) {
    v.failure = FirstFailure{"assembly", 0, 0, 0, e.what(), ""};
  }
  v.pass = !v.failure.has_value();
  return v;
}

Verdict verify(const std::string& id, std::size_t order) { return verify(identity_case(id), order); }

std::vector<Verdict> verify_all(const std::vector<std::string>& ids, std::size_t order, std::size_t heavy_order,
                                unsigned threads) {
  std::vector<const IdentityCase*> cases;
  for (const auto& id : ids) cases.push_back(&identity_case(id));
  std::vector<Verdict> out(cases.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < cases.size();)
      out[k] = verify(*cases[k], cases[k]->heavy ? heavy_order : order);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(threads, cases.size()); ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"id", v.id},
                     {"anchor", v.anchor},
                     {"order_checked", v.order_checked},
                     {"checks", v.checks},
                     {"verdict", v.pass ? "pass" : "fail"}};
  if (v.failure) {
    const auto& f = *v.failure;
    j["first_failure"] = {{"check", f.check}, {"t", f.t}, {"i", f.i}, {"j", f.j}, {"lhs", f.lhs}, {"rhs", f.rhs}};
  }
}

std::string format_table(const std::vector<Verdict>& verdicts) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "id" << std::setw(8) << "order" << std::setw(8) << "checks" << "verdict\n";
  for (const auto& v : verdicts) {
    os << std::left << std::setw(20) << v.id << std::setw(8) << v.order_checked << std::setw(8) << v.checks
       << (v.pass ? "pass" : "FAIL");
    if (v.failure)
      os << "  [" << v.failure->check << " at t^" << v.failure->t << " x^" << v.failure->i << " y^" << v.failure->j
         << ": " << v.failure->lhs << " vs " << v.failure->rhs << "]";
    os << "\n";
  }
  return os.str();
}

BoundaryValues boundary_values_from_walks(std::size_t order) {
  const SquareRS sq = square_rs(order);
  const DiagRS dg = diag_rs(ModelKind::DiagonalOrigin, order);
  return {sq.S1.truncated(order), sq.P0.truncated(order), dg.S1.truncated(order), dg.F0.truncated(order)};
}

// ---------------------------------------------------------------- reflection

namespace {

struct ReflectSetup {
  WalkModel cone;
  WalkModel wedge;
};

ReflectSetup reflect_setup(Lattice lattice) {
  StepSet steps = lattice == Lattice::Square ? StepSet::square() : StepSet::diagonal();
  Point start = lattice == Lattice::Square ? Point{-1, 0} : Point{-2, 0};
  return {WalkModel(steps, Region::ThreeQuadrant, start), WalkModel(StepSet::square(), Region::Wedge135, {0, 0})};
}

void check_reflect_args(Lattice lattice, int i, int j, int n) {
  if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
  if (j < 0 || i >= j) throw std::invalid_argument("reflection needs j >= 0 and i < j");
  if (lattice == Lattice::Diagonal && (i + j) % 2 != 0)
    throw std::invalid_argument("diagonal lattice needs i + j even");
}

Point wedge_point(Lattice lattice, int i, int j) {
  return lattice == Lattice::Square ? Point{-i - 1, j} : Point{(i + j) / 2 + 1, (j - i) / 2 - 1};
}

ReflectResult reflect_from_tables(Lattice lattice, int i, int j, const CountTable& cone, const CountTable& wedge) {
  ReflectResult r;
  r.forward = cone.at({i, j});
  r.backward = cone.at({j, i});
  r.wedge_point = wedge_point(lattice, i, j);
  r.wedge = wedge.at(r.wedge_point);
  r.pass = r.forward - r.backward == r.wedge;
  std::ostringstream os;
  os << "n=" << cone.n << " c(" << i << "," << j << ")=" << r.forward.get_str() << " c(" << j << "," << i
     << ")=" << r.backward.get_str() << " g(" << r.wedge_point.i << "," << r.wedge_point.j
     << ")=" << r.wedge.get_str();
  r.detail = os.str();
  return r;
}

}  // namespace

ReflectResult reflect_check(Lattice lattice, int i, int j, int n) {
  check_reflect_args(lattice, i, j, n);
  const ReflectSetup s = reflect_setup(lattice);
  return reflect_from_tables(lattice, i, j, count_walks(s.cone, n), count_walks(s.wedge, n));
}

std::optional<ReflectResult> reflect_check_upto(Lattice lattice, int n_max) {
  const ReflectSetup s = reflect_setup(lattice);
  const auto cone = count_walks_upto(s.cone, n_max);
  const auto wedge = count_walks_upto(s.wedge, n_max);
  const int reach = n_max + 2;
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= reach; ++j)
      for (int i = -reach; i < j; ++i) {
        if (lattice == Lattice::Diagonal && (i + j) % 2 != 0) continue;
        ReflectResult r = reflect_from_tables(lattice, i, j, cone[n], wedge[n]);
        if (!r.pass) return r;
      }
  return std::nullopt;
}

std::pair<UniSeries, UniSeries> gessel_series_direct(std::size_t order) {
  const SeriesT g = generating_series(WalkModel(StepSet::square(), Region::Wedge135, {0, 0}), order);
  UniSeries axis = at_y_zero(g);
  UniSeries diag = g.map([](const LP& p) {
    LP1 out;
    for (const auto& [e, c] : p.terms())
      if (e.first == -e.second) out += LP1::monomial(c, e.second);
    return out;
  });
  return {axis, diag};
}

GesselSeries gessel_series_from_three_quadrants(std::size_t order) {
  GesselSeries g;
  const Decomposition& sq = decomposition(ModelKind::SquareShifted, order);
  g.axis = at_y_zero(sq.L) - at_x_zero(sq.B);
  g.diagonal = param_target("DIAG_ASYM_LX0", order) - param_target("DIAG_ASYM_B0X", order);
  const auto direct = gessel_series_direct(order);
  g.matches_direct = agrees(g.axis, direct.first) && agrees(g.diagonal, direct.second) &&
                     g.axis.order() >= order && g.diagonal.order() >= order;
  return g;
}

}  // namespace walks
