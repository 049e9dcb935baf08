#include "walks/decompose.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace walks {

ModelKind parse_model_kind(const std::string& name) {
  for (ModelKind k : {ModelKind::SquareOrigin, ModelKind::DiagonalOrigin, ModelKind::SquareShifted,
                      ModelKind::DiagonalShifted})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::SquareOrigin: return "square-origin";
    case ModelKind::DiagonalOrigin: return "diagonal-origin";
    case ModelKind::SquareShifted: return "square-shifted";
    case ModelKind::DiagonalShifted: return "diagonal-shifted";
  }
  return "?";
}

Lattice lattice_of(ModelKind kind) {
  return kind == ModelKind::SquareOrigin || kind == ModelKind::SquareShifted ? Lattice::Square : Lattice::Diagonal;
}

Point start_of(ModelKind kind) {
  switch (kind) {
    case ModelKind::SquareOrigin:
    case ModelKind::DiagonalOrigin: return {0, 0};
    case ModelKind::SquareShifted: return {-1, 0};
    case ModelKind::DiagonalShifted: return {-2, 0};
  }
  return {0, 0};
}

namespace {

StepSet steps_of(Lattice lattice) { return lattice == Lattice::Square ? StepSet::square() : StepSet::diagonal(); }

Rational quadrant_weight(ModelKind kind) {
  switch (kind) {
    case ModelKind::SquareOrigin:
    case ModelKind::DiagonalOrigin: return Rational(-1, 3);
    case ModelKind::SquareShifted: return Rational(0);
    case ModelKind::DiagonalShifted: return Rational(1, 3);
  }
  return Rational(0);
}

Decomposition build(ModelKind kind, std::size_t order) {
  Decomposition d;
  d.kind = kind;
  d.order = order;
  const StepSet steps = steps_of(lattice_of(kind));
  d.C = generating_series(WalkModel(steps, Region::ThreeQuadrant, start_of(kind)), order);
  d.Q = generating_series(WalkModel(steps, Region::Quadrant, {0, 0}), order);
  d.q = quadrant_weight(kind);
  d.A = d.C + quadrant_alternation(d.Q) * d.q;
  d.P = extract_part(extract_part(d.A, Var::X, Part::nonneg()), Var::Y, Part::nonneg());
  d.L = substitute_inverse(times_monomial(extract_part(d.A, Var::X, Part::negative()), 1, 0), Var::X);
  d.B = substitute_inverse(times_monomial(extract_part(d.A, Var::Y, Part::negative()), 0, 1), Var::Y);
  d.M = d.L + swap_xy(d.B);
  d.N = d.L - swap_xy(d.B);
  return d;
}

}  // namespace

const Decomposition& decomposition(ModelKind kind, std::size_t order) {
  static std::mutex mu;
  static std::map<std::pair<ModelKind, std::size_t>, std::unique_ptr<Decomposition>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{kind, order}];
  if (!slot) slot = std::make_unique<Decomposition>(build(kind, order));
  return *slot;
}

SeriesT kernel_series(Lattice lattice, std::size_t order) {
  return laurent_series({LaurentPoly2(Rational(1)), -steps_of(lattice).step_polynomial()}, order);
}

UniSeries at_y_zero(const SeriesT& f) { return to_uni(extract_part(f, Var::Y, Part::coeff(0)), Var::X); }
UniSeries at_x_zero(const SeriesT& f) { return to_uni(extract_part(f, Var::X, Part::coeff(0)), Var::Y); }

SeriesT quadrant_alternation(const SeriesT& q) {
  return q - times_monomial(substitute_inverse(q, Var::X), -2, 0) - times_monomial(substitute_inverse(q, Var::Y), 0, -2);
}

namespace {

enum class Which { L, B, Mixed };
enum class Slice { XZero, YZero };

struct TargetRecipe {
  ModelKind kind;
  Which which;
  Slice slice;        // YZero: F(x, 0); XZero: F(0, x)
  bool sqrt_change;   // x -> sqrt x (else x -> x t)
  int x_power;        // extra factor x^k (sqrt: exponent offset)
  std::size_t t_power;
};

const std::map<std::string, TargetRecipe>& recipes() {
  static const std::map<std::string, TargetRecipe> table = {
      {"SQ_MXT0", {ModelKind::SquareOrigin, Which::Mixed, Slice::YZero, false, 0, 1}},
      {"SQ_M0XT", {ModelKind::SquareOrigin, Which::Mixed, Slice::XZero, false, 0, 1}},
      {"DIAG_MX0", {ModelKind::DiagonalOrigin, Which::Mixed, Slice::YZero, true, -1, 2}},
      {"DIAG_M0X", {ModelKind::DiagonalOrigin, Which::Mixed, Slice::XZero, true, 1, 1}},
      {"SQ_ASYM_LXT0", {ModelKind::SquareShifted, Which::L, Slice::YZero, false, 0, 0}},
      {"SQ_ASYM_L0XT", {ModelKind::SquareShifted, Which::L, Slice::XZero, false, 1, 0}},
      {"SQ_ASYM_BXT0", {ModelKind::SquareShifted, Which::B, Slice::YZero, false, 1, 0}},
      {"SQ_ASYM_B0XT", {ModelKind::SquareShifted, Which::B, Slice::XZero, false, 0, 0}},
      {"DIAG_ASYM_LX0", {ModelKind::DiagonalShifted, Which::L, Slice::YZero, true, -1, 0}},
      {"DIAG_ASYM_L0X", {ModelKind::DiagonalShifted, Which::L, Slice::XZero, true, 1, 1}},
      {"DIAG_ASYM_BX0", {ModelKind::DiagonalShifted, Which::B, Slice::YZero, true, 1, 1}},
      {"DIAG_ASYM_B0X", {ModelKind::DiagonalShifted, Which::B, Slice::XZero, true, -1, 0}},
  };
  return table;
}

}  // namespace

UniSeries param_target(const std::string& id, std::size_t order) {
  auto it = recipes().find(id);
  if (it == recipes().end()) throw std::out_of_range("unknown parametrization id '" + id + "'");
  const TargetRecipe& r = it->second;
  const Decomposition& d = decomposition(r.kind, order);
  const SeriesT& f = r.which == Which::L ? d.L : r.which == Which::B ? d.B : d.mixed();
  UniSeries slice = r.slice == Slice::YZero ? at_y_zero(f) : at_x_zero(f);
  UniSeries out = r.sqrt_change ? substitute_sqrt(slice, r.x_power)
                                : times_monomial(substitute_x_times_t(slice), r.x_power);
  return out.shifted(r.t_power).truncated(order);
}

}  // namespace walks
