#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walks/mpoly.hpp"
#include "walks/series_ops.hpp"
#include "walks/walk_oracle.hpp"

namespace walks {

/// The defining equation does not determine the next coefficient.
class ImplicitSolveError : public std::runtime_error {
 public:
  ImplicitSolveError(std::size_t order, const std::string& what)
      : std::runtime_error(what + " (order " + std::to_string(order) + ")"), order_(order) {}
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
};

/// Order-by-order solution of residual(w) = 0 with w(0) = initial. For n >= 1
/// the coefficient of t^n in residual(w + e t^n) is affine in e; its slope
/// (the pivot) is measured at every order and must be nonzero and must
/// divide the constant part exactly in C.
template <class C, class Residual>
Series<C> solve_implicit(Residual&& residual, const C& initial, std::size_t order) {
  Series<C> w(order);
  if (order == 0) return w;
  w.set(0, initial);
  {
    Series<C> r = residual(w.truncated(1));
    if (r.order() < 1 || !Ring<C>::is_zero(r[0]))
      throw ImplicitSolveError(0, "initial term does not satisfy the equation");
  }
  for (std::size_t n = 1; n < order; ++n) {
    Series<C> trial = w.truncated(n + 1);
    Series<C> r0 = residual(trial);
    if (r0.order() <= n) throw ImplicitSolveError(n, "residual lost precision");
    trial.set(n, Ring<C>::one());
    Series<C> r1 = residual(trial);
    C pivot = r1[n] - r0[n];
    if (Ring<C>::is_zero(pivot)) throw ImplicitSolveError(n, "pivot vanishes");
    auto q = Ring<C>::exact_quotient(-r0[n], pivot);
    if (!q) throw ImplicitSolveError(n, "pivot does not divide the residual");
    w.set(n, std::move(*q));
  }
  return w;
}

/// F(w, t, x, ...) = 0 with a prescribed constant term; other symbols are
/// bound to previously computed series.
struct ImplicitSeriesDef {
  std::string id;
  std::string anchor;
  MPoly equation;  // unknown is the symbol "w"
  Rational initial;
};

/// Formal parameter x and the variable t as univariate series.
UniSeries x_series(std::size_t order);
UniSeries t_series(std::size_t order);

UniSeries solve_implicit(const ImplicitSeriesDef& def, std::map<std::string, UniSeries> known,
                         std::size_t order);

/// T, Z = sqrt(T), U and V, all to the same order.
struct ParamSeries {
  std::size_t order = 0;
  UniSeries T, Z, U, V;

  /// Bindings for the symbols z, T, u, v, x, t.
  std::map<std::string, UniSeries> bindings() const;
};

/// Computed once per process and extended on demand; thread-safe.
ParamSeries parametrizing_series(std::size_t order);

/// Residual of the defining equation of T, U or V at the given series.
UniSeries defining_residual(const std::string& id, const ParamSeries& p);

enum class Lattice { Square, Diagonal };
Lattice parse_lattice_kind(const std::string& name);

/// The power-series root Y(x) of the kernel in y.
UniSeries kernel_root_Y(Lattice lattice, std::size_t order);
/// Kernel multiplied through by y: y K(x, y) as a polynomial in y with
/// coefficients in Q[x, 1/x][t], evaluated at a series.
UniSeries kernel_times_y(Lattice lattice, const UniSeries& y);

/// (1 - sqrt(1 - 16t^2)) / (4t).
ScalarSeries series_X0(std::size_t order);

/// numerator / denominator over the parametrizing series.
struct RationalExpr {
  std::string expression;
  MPoly numerator;
  MPoly denominator;

  /// Exact to `order`; intermediate series are computed with extra orders to
  /// absorb the t-valuation of the denominator.
  UniSeries evaluate(std::size_t order) const;
};

struct ParamEntry {
  std::string id;
  std::string anchor;
  std::string lattice;
  Point start;
  std::string change;  // "xt" or "sqrt"
  RationalExpr expr;
};

/// t^power C_{i,j} = q * Q_{0,0} + expr.
struct EndpointEntry {
  std::string id;
  std::string anchor;
  std::string lattice;
  Point start;
  Point endpoint;
  int t_power = 0;
  Rational quadrant_coefficient;
  RationalExpr expr;
};

struct ValueEntry {
  std::string id;
  std::string anchor;
  RationalExpr expr;
};

/// Polynomial relation in w (the series) and t.
struct Relation {
  std::string id;
  std::string anchor;
  std::string expression;
  MPoly poly;
};

class AlgebraicCatalog {
 public:
  static AlgebraicCatalog load(const std::filesystem::path& params_json, const std::filesystem::path& relations_json);
  static const AlgebraicCatalog& builtin();

  const std::vector<ParamEntry>& params() const { return params_; }
  const std::vector<EndpointEntry>& endpoints() const { return endpoints_; }
  const std::vector<ValueEntry>& values() const { return values_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<ImplicitSeriesDef>& implicit() const { return implicit_; }

  const ParamEntry& param(const std::string& id) const;
  const EndpointEntry& endpoint(const std::string& id) const;
  const ValueEntry& value(const std::string& id) const;
  const Relation& relation(const std::string& id) const;
  const ImplicitSeriesDef& implicit_def(const std::string& id) const;

 private:
  std::vector<ParamEntry> params_;
  std::vector<EndpointEntry> endpoints_;
  std::vector<ValueEntry> values_;
  std::vector<Relation> relations_;
  std::vector<ImplicitSeriesDef> implicit_;
};

/// Catalogued parametrization as a series in t with coefficients in Q[x].
UniSeries eval_param(const std::string& id, std::size_t order);

/// First t-power where relation(series, t) is nonzero; nullopt if it
/// vanishes to the series' order.
std::optional<std::size_t> check_poly_relation(const ScalarSeries& series, const MPoly& relation);

/// Evaluates an endpoint expression and compares it with the DP series.
/// Returns the first differing t-power, or nullopt.
std::optional<std::size_t> endpoint_rational_check(const std::string& id, std::size_t order);

/// Left side t^power C_{i,j} (from the DP) and right side of an endpoint entry.
std::pair<ScalarSeries, ScalarSeries> endpoint_sides(const EndpointEntry& e, std::size_t order);

}  // namespace walks
