#pragma once

#include <string>

#include "walks/algebraic.hpp"
#include "walks/series_ops.hpp"
#include "walks/walk_oracle.hpp"

namespace walks {

/// The four three-quadrant models: square and diagonal steps, each from the
/// origin and from the shifted start (-1,0) resp. (-2,0).
enum class ModelKind { SquareOrigin, DiagonalOrigin, SquareShifted, DiagonalShifted };

ModelKind parse_model_kind(const std::string& name);
std::string to_string(ModelKind kind);
Lattice lattice_of(ModelKind kind);
Point start_of(ModelKind kind);

/// Every series is read off the DP generating function by exponent-sign
/// extraction:
///   A = C + q (Q - x^-2 Q(1/x, y) - y^-2 Q(x, 1/y)),
///   A = P + x^-1 L(1/x, y) + y^-1 B(x, 1/y),
///   M = L + B(y, x),  N = L - B(y, x),
/// with q = -1/3 from the origin, +1/3 on the diagonal from (-2,0) and 0 on
/// the square from (-1,0). From the origin L(x,y) = B(y,x), so the
/// single-series convention of the symmetric models is `mixed` = L.
struct Decomposition {
  ModelKind kind;
  std::size_t order = 0;
  SeriesT C;  // three-quadrant walks
  SeriesT Q;  // quadrant walks from the origin (same lattice)
  Rational q;
  SeriesT A, P, L, B, M, N;

  /// L for the origin models, where M = L + B(y,x) would double it.
  const SeriesT& mixed() const { return L; }
};

/// Cached per (kind, order); thread-safe.
const Decomposition& decomposition(ModelKind kind, std::size_t order);

/// 1 - t S(x, y) for the lattice's step polynomial S.
SeriesT kernel_series(Lattice lattice, std::size_t order);

/// F(x, 0) and F(0, y) as univariate series in their remaining variable.
UniSeries at_y_zero(const SeriesT& f);
UniSeries at_x_zero(const SeriesT& f);

/// Q(x,y) - x^-2 Q(1/x, y) - y^-2 Q(x, 1/y).
SeriesT quadrant_alternation(const SeriesT& q);

/// DP-side counterpart of a catalogued parametrization, as a series in t with
/// coefficients in Q[x], exact to `order`.
UniSeries param_target(const std::string& id, std::size_t order);

}  // namespace walks
