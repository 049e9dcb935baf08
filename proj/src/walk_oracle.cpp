#include "walks/walk_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace walks {

// ---------------------------------------------------------------- steps, regions

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("step set must be nonempty");
  std::set<Step> seen;
  for (const auto& s : steps_) {
    if (s.i < -1 || s.i > 1 || s.j < -1 || s.j > 1 || (s.i == 0 && s.j == 0))
      throw std::invalid_argument("steps must lie in {-1,0,1}^2 minus the origin");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate step");
  }
}

StepSet StepSet::square() { return StepSet({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
StepSet StepSet::diagonal() { return StepSet({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

std::string StepSet::name() const {
  auto same = [this](const StepSet& o) {
    return std::set<Step>(steps_.begin(), steps_.end()) == std::set<Step>(o.steps_.begin(), o.steps_.end());
  };
  if (same(square())) return "square";
  if (same(diagonal())) return "diagonal";
  return "custom";
}

LaurentPoly2 StepSet::step_polynomial() const {
  LaurentPoly2 p;
  for (const auto& s : steps_) p.add_term(s.i, s.j, 1);
  return p;
}

bool contains(Region region, int i, int j) {
  switch (region) {
    case Region::Quadrant: return i >= 0 && j >= 0;
    case Region::ThreeQuadrant: return i >= 0 || j >= 0;
    case Region::Wedge135: return i + j >= 0 && j >= 0;
    case Region::HalfPlane: return i + j >= 0;
    case Region::FullPlane: return true;
  }
  return false;
}

std::string to_string(Region region) {
  switch (region) {
    case Region::Quadrant: return "quadrant";
    case Region::ThreeQuadrant: return "three-quadrant";
    case Region::Wedge135: return "wedge135";
    case Region::HalfPlane: return "half-plane";
    case Region::FullPlane: return "full-plane";
  }
  return "?";
}

Region parse_region(const std::string& name) {
  for (Region r : {Region::Quadrant, Region::ThreeQuadrant, Region::Wedge135, Region::HalfPlane, Region::FullPlane})
    if (to_string(r) == name) return r;
  throw std::invalid_argument("unknown region '" + name + "'");
}

StepSet parse_lattice(const std::string& name) {
  if (name == "square") return StepSet::square();
  if (name == "diagonal") return StepSet::diagonal();
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

WalkModel::WalkModel(StepSet s, Region r, Point p) : steps(std::move(s)), region(r), start(p) {
  if (!contains(region, start.i, start.j)) throw std::invalid_argument("start point outside the region");
}

BigInt CountTable::at(Point p) const {
  auto it = counts.find(p);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [p, c] : counts) sum += c;
  return sum;
}

// ---------------------------------------------------------------- dense DP

namespace {

/// Box [start - n_max, start + n_max]^2, row-major.
struct Grid {
  int n_max;
  Point start;
  int width;

  Grid(int n, Point s) : n_max(n), start(s), width(2 * n + 1) {}
  std::size_t cells() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(width); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - start.i + n_max) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(j - start.j + n_max);
  }
};

/// Pull-form layer update: next[p] = sum over steps s of cur[p - s], for p
/// in the region and within distance k of the start. Rows are split between
/// workers; writes are disjoint, so the result is deterministic.
template <class Value, class Add>
void advance_layer(const Grid& g, const WalkModel& model, int k, const std::vector<Value>& cur,
                   std::vector<Value>& next, unsigned threads, Add add) {
  const int lo_i = g.start.i - k, hi_i = g.start.i + k;
  auto work = [&](int row_begin, int row_end) {
    for (int i = row_begin; i < row_end; ++i) {
      for (int j = g.start.j - k; j <= g.start.j + k; ++j) {
        Value& dst = next[g.index(i, j)];
        dst = Value(0);
        if (!contains(model.region, i, j)) continue;
        for (const auto& s : model.steps.steps()) {
          int si = i - s.i, sj = j - s.j;
          if (std::abs(si - g.start.i) > k - 1 || std::abs(sj - g.start.j) > k - 1) continue;
          add(dst, cur[g.index(si, sj)]);
        }
      }
    }
  };
  const int rows = hi_i - lo_i + 1;
  if (threads <= 1 || rows < 8) {
    work(lo_i, hi_i + 1);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (rows + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  for (int b = lo_i; b <= hi_i; b += chunk) pool.emplace_back(work, b, std::min(hi_i + 1, b + chunk));
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<CountTable> count_walks_upto(const WalkModel& model, int n_max, unsigned threads) {
  if (n_max < 0) throw std::invalid_argument("walk length must be nonnegative");
  Grid g(n_max, model.start);
  std::vector<BigInt> cur(g.cells()), next(g.cells());
  cur[g.index(model.start.i, model.start.j)] = 1;
  std::vector<CountTable> out;
  auto snapshot = [&](int k) {
    CountTable t;
    t.n = k;
    for (int i = g.start.i - k; i <= g.start.i + k; ++i)
      for (int j = g.start.j - k; j <= g.start.j + k; ++j) {
        const BigInt& v = cur[g.index(i, j)];
        if (v != 0) t.counts.emplace(Point{i, j}, v);
      }
    out.push_back(std::move(t));
  };
  snapshot(0);
  for (int k = 1; k <= n_max; ++k) {
    advance_layer(g, model, k, cur, next, threads, [](BigInt& d, const BigInt& s) { d += s; });
    std::swap(cur, next);
    snapshot(k);
  }
  return out;
}

CountTable count_walks(const WalkModel& model, int n, unsigned threads) {
  return std::move(count_walks_upto(model, n, threads).back());
}

ScalarSeries endpoint_series(const WalkModel& model, Point endpoint, std::size_t order) {
  if (!contains(model.region, endpoint.i, endpoint.j)) throw std::invalid_argument("endpoint outside the region");
  ScalarSeries out(order);
  if (order == 0) return out;
  auto tables = count_walks_upto(model, static_cast<int>(order) - 1);
  for (std::size_t n = 0; n < order; ++n) out.set(n, Rational(tables[n].at(endpoint)));
  return out;
}

SeriesT generating_series(const WalkModel& model, std::size_t order) {
  SeriesT out(order);
  if (order == 0) return out;
  auto tables = count_walks_upto(model, static_cast<int>(order) - 1);
  for (std::size_t n = 0; n < order; ++n) {
    LaurentPoly2 p;
    for (const auto& [pt, c] : tables[n].counts) p.add_term(pt.i, pt.j, Rational(c));
    out.set(n, std::move(p));
  }
  return out;
}

BigInt total_count(const WalkModel& model, int n) { return count_walks(model, n).total(); }

std::vector<double> normalized_totals(const WalkModel& model, int n_max, unsigned threads) {
  if (n_max < 0) throw std::invalid_argument("walk length must be nonnegative");
  Grid g(n_max, model.start);
  std::vector<double> cur(g.cells(), 0.0), next(g.cells(), 0.0);
  cur[g.index(model.start.i, model.start.j)] = 1.0;
  const double inv = 1.0 / static_cast<double>(model.steps.size());
  std::vector<double> out{1.0};
  for (int k = 1; k <= n_max; ++k) {
    advance_layer(g, model, k, cur, next, threads, [inv](double& d, double s) { d += s * inv; });
    std::swap(cur, next);
    double sum = 0.0;
    for (int i = g.start.i - k; i <= g.start.i + k; ++i)
      for (int j = g.start.j - k; j <= g.start.j + k; ++j) sum += cur[g.index(i, j)];
    out.push_back(sum);
  }
  return out;
}

std::vector<std::uint64_t> total_counts_mod(const WalkModel& model, int n_max, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus must lie in [2, 2^62)");
  Grid g(n_max, model.start);
  std::vector<std::uint64_t> cur(g.cells(), 0), next(g.cells(), 0);
  cur[g.index(model.start.i, model.start.j)] = 1 % p;
  std::vector<std::uint64_t> out{1 % p};
  for (int k = 1; k <= n_max; ++k) {
    advance_layer(g, model, k, cur, next, 1, [p](std::uint64_t& d, std::uint64_t s) {
      d += s;
      if (d >= p) d -= p;
    });
    std::swap(cur, next);
    std::uint64_t sum = 0;
    for (int i = g.start.i - k; i <= g.start.i + k; ++i)
      for (int j = g.start.j - k; j <= g.start.j + k; ++j) {
        sum += cur[g.index(i, j)];
        if (sum >= p) sum -= p;
      }
    out.push_back(sum);
  }
  return out;
}

void to_json(nlohmann::json& j, const CountTable& table) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [p, c] : table.counts) counts.push_back({{"i", p.i}, {"j", p.j}, {"count", c.get_str()}});
  j = nlohmann::json{{"n", table.n}, {"counts", std::move(counts)}};
}

void from_json(const nlohmann::json& j, CountTable& table) {
  table.n = j.at("n").get<int>();
  table.counts.clear();
  for (const auto& e : j.at("counts")) {
    BigInt c;
    if (c.set_str(e.at("count").get<std::string>(), 10) != 0) throw std::invalid_argument("malformed count string");
    table.counts[Point{e.at("i").get<int>(), e.at("j").get<int>()}] = c;
  }
}

}  // namespace walks
