#include "walks/algebraic.hpp"

#include <mutex>

#include "walks/data.hpp"

namespace walks {

UniSeries x_series(std::size_t order) { return UniSeries::constant(LaurentPoly1::monomial(1, 1), order); }

UniSeries t_series(std::size_t order) { return UniSeries::monomial(LaurentPoly1(1), 1, order); }

UniSeries solve_implicit(const ImplicitSeriesDef& def, std::map<std::string, UniSeries> known, std::size_t order) {
  known["t"] = t_series(order);
  known["x"] = x_series(order);
  auto residual = [&](const UniSeries& w) {
    std::map<std::string, UniSeries> b;
    for (const auto& [k, s] : known) b.emplace(k, s.truncated(w.order()));
    b["w"] = w;
    return def.equation.evaluate(b, w.order());
  };
  return solve_implicit(residual, LaurentPoly1(def.initial), order);
}

std::map<std::string, UniSeries> ParamSeries::bindings() const {
  return {{"z", Z}, {"T", T}, {"u", U}, {"v", V}, {"x", x_series(order)}, {"t", t_series(order)}};
}

namespace {

std::mutex param_mutex;
ParamSeries param_cache;

}  // namespace

ParamSeries parametrizing_series(std::size_t order) {
  std::lock_guard lock(param_mutex);
  if (param_cache.order < order) {
    const auto& cat = AlgebraicCatalog::builtin();
    ParamSeries p;
    p.order = order;
    p.T = solve_implicit(cat.implicit_def("T"), {}, order);
    p.Z = walks::sqrt(p.T);
    p.U = solve_implicit(cat.implicit_def("U"), {{"T", p.T}}, order);
    p.V = solve_implicit(cat.implicit_def("V"), {{"T", p.T}}, order);
    param_cache = std::move(p);
  }
  ParamSeries out;
  out.order = order;
  out.T = param_cache.T.truncated(order);
  out.Z = param_cache.Z.truncated(order);
  out.U = param_cache.U.truncated(order);
  out.V = param_cache.V.truncated(order);
  return out;
}

UniSeries defining_residual(const std::string& id, const ParamSeries& p) {
  auto b = p.bindings();
  if (id == "T") b["w"] = p.T;
  else if (id == "U") b["w"] = p.U;
  else if (id == "V") b["w"] = p.V;
  else if (id == "Z") return p.Z * p.Z - p.T;
  else throw std::invalid_argument("unknown parametrizing series '" + id + "'");
  return AlgebraicCatalog::builtin().implicit_def(id).equation.evaluate(b, p.order);
}

Lattice parse_lattice_kind(const std::string& name) {
  if (name == "square") return Lattice::Square;
  if (name == "diagonal") return Lattice::Diagonal;
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

UniSeries kernel_times_y(Lattice lattice, const UniSeries& y) {
  const std::size_t n = y.order();
  const LaurentPoly1 s = LaurentPoly1::from_coeffs(-1, {1, 0, 1});  // x + 1/x
  UniSeries t = t_series(n);
  UniSeries one = UniSeries::constant(1, n);
  if (lattice == Lattice::Square) {
    // t Y^2 - (1 - t(x + 1/x)) Y + t
    return t * y * y - (one - t.scaled(s)) * y + t;
  }
  // t (x + 1/x) Y^2 - Y + t (x + 1/x)
  UniSeries ts = t.scaled(s);
  return ts * y * y - y + ts;
}

UniSeries kernel_root_Y(Lattice lattice, std::size_t order) {
  return solve_implicit([lattice](const UniSeries& y) { return kernel_times_y(lattice, y); }, LaurentPoly1(),
                        order);
}

ScalarSeries series_X0(std::size_t order) {
  ScalarSeries disc = ScalarSeries::polynomial({1, 0, -16}, order + 1);
  ScalarSeries num = ScalarSeries::constant(1, order + 1) - walks::sqrt(disc);
  return num.unshifted(1) * make_rational(1, 4);
}

UniSeries RationalExpr::evaluate(std::size_t order) const {
  std::size_t guard = 6;
  for (;;) {
    const std::size_t m = order + guard;
    auto b = parametrizing_series(m).bindings();
    UniSeries den = denominator.evaluate(b, m);
    const std::size_t v = den.valuation();
    if (v == m) throw SeriesError("denominator vanishes to the computed order: " + expression);
    if (v > guard) {
      guard = v;
      continue;
    }
    UniSeries num = numerator.evaluate(b, m);
    return divide(num, den).truncated(order);
  }
}

// ---------------------------------------------------------------- catalog

namespace {

RationalExpr read_expr(const nlohmann::json& j) {
  return {j.at("expression").get<std::string>(), j.at("numerator").get<MPoly>(), j.at("denominator").get<MPoly>()};
}

Point read_point(const nlohmann::json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

template <class E>
const E& find_id(const std::vector<E>& v, const std::string& id, const char* kind) {
  for (const auto& e : v)
    if (e.id == id) return e;
  throw std::invalid_argument(std::string("unknown ") + kind + " id '" + id + "'");
}

}  // namespace

AlgebraicCatalog AlgebraicCatalog::load(const std::filesystem::path& params_json,
                                        const std::filesystem::path& relations_json) {
  AlgebraicCatalog c;
  nlohmann::json p = load_json(params_json);
  for (const auto& e : p.at("params")) {
    std::string change = e.at("change").get<std::string>();
    if (change != "xt" && change != "sqrt") throw std::invalid_argument("unknown variable change " + change);
    c.params_.push_back({e.at("id").get<std::string>(), e.value("anchor", ""), e.at("lattice").get<std::string>(),
                         read_point(e.at("start")), change, read_expr(e)});
  }
  for (const auto& e : p.at("endpoints"))
    c.endpoints_.push_back({e.at("id").get<std::string>(), e.value("anchor", ""), e.at("lattice").get<std::string>(),
                            read_point(e.at("start")), read_point(e.at("endpoint")), e.at("t_power").get<int>(),
                            parse_rational(e.at("quadrant_coefficient").get<std::string>()), read_expr(e)});
  for (const auto& e : p.at("values"))
    c.values_.push_back({e.at("id").get<std::string>(), e.value("anchor", ""), read_expr(e)});
  nlohmann::json r = load_json(relations_json);
  for (const auto& e : r.at("relations"))
    c.relations_.push_back({e.at("id").get<std::string>(), e.value("anchor", ""), e.at("expression").get<std::string>(),
                            e.at("terms").get<MPoly>()});
  for (const auto& e : r.at("implicit"))
    c.implicit_.push_back({e.at("id").get<std::string>(), e.value("anchor", ""), e.at("terms").get<MPoly>(),
                           parse_rational(e.at("initial").get<std::string>())});
  return c;
}

const AlgebraicCatalog& AlgebraicCatalog::builtin() {
  static const AlgebraicCatalog c = load(data_dir() / "params.json", data_dir() / "relations.json");
  return c;
}

const ParamEntry& AlgebraicCatalog::param(const std::string& id) const { return find_id(params_, id, "parametrization"); }
const EndpointEntry& AlgebraicCatalog::endpoint(const std::string& id) const {
  return find_id(endpoints_, id, "endpoint expression");
}
const ValueEntry& AlgebraicCatalog::value(const std::string& id) const { return find_id(values_, id, "value"); }
const Relation& AlgebraicCatalog::relation(const std::string& id) const { return find_id(relations_, id, "relation"); }
const ImplicitSeriesDef& AlgebraicCatalog::implicit_def(const std::string& id) const {
  return find_id(implicit_, id, "implicit series");
}

UniSeries eval_param(const std::string& id, std::size_t order) {
  return AlgebraicCatalog::builtin().param(id).expr.evaluate(order);
}

std::optional<std::size_t> check_poly_relation(const ScalarSeries& series, const MPoly& relation) {
  const std::size_t n = series.order();
  std::map<std::string, ScalarSeries> b{{"w", series}, {"t", ScalarSeries::monomial(1, 1, n)}};
  ScalarSeries r = relation.evaluate(b, n);
  std::size_t v = r.valuation();
  if (v == r.order()) return std::nullopt;
  return v;
}

std::pair<ScalarSeries, ScalarSeries> endpoint_sides(const EndpointEntry& e, std::size_t order) {
  WalkModel model(parse_lattice(e.lattice), Region::ThreeQuadrant, e.start);
  ScalarSeries lhs = endpoint_series(model, e.endpoint, order).shifted(static_cast<std::size_t>(e.t_power)).truncated(order);
  ScalarSeries rhs = to_scalar(e.expr.evaluate(order));
  if (sgn(e.quadrant_coefficient) != 0) {
    WalkModel quadrant(parse_lattice(e.lattice), Region::Quadrant, {0, 0});
    rhs = rhs + endpoint_series(quadrant, {0, 0}, order) * e.quadrant_coefficient;
  }
  return {lhs, rhs};
}

std::optional<std::size_t> endpoint_rational_check(const std::string& id, std::size_t order) {
  auto [lhs, rhs] = endpoint_sides(AlgebraicCatalog::builtin().endpoint(id), order);
  return first_difference(lhs, rhs);
}

}  // namespace walks
