#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walks/rational.hpp"
#include "walks/series_ops.hpp"

namespace walks {

struct Point {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using Step = Point;

/// Small steps: a nonempty set of distinct (dx, dy) in {-1, 0, 1}^2 \ {(0, 0)}.
class StepSet {
 public:
  explicit StepSet(std::vector<Step> steps);

  static StepSet square();
  static StepSet diagonal();

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  /// "square", "diagonal" or "custom".
  std::string name() const;
  /// Step polynomial sum x^dx y^dy.
  LaurentPoly2 step_polynomial() const;

  friend bool operator==(const StepSet&, const StepSet&) = default;

 private:
  std::vector<Step> steps_;
};

enum class Region { Quadrant, ThreeQuadrant, Wedge135, HalfPlane, FullPlane };

bool contains(Region region, int i, int j);
std::string to_string(Region region);
/// Accepts the names produced by to_string ("quadrant", "three-quadrant",
/// "wedge135", "half-plane", "full-plane").
Region parse_region(const std::string& name);
StepSet parse_lattice(const std::string& name);

struct WalkModel {
  StepSet steps;
  Region region;
  Point start;

  /// Throws std::invalid_argument when start lies outside the region.
  WalkModel(StepSet steps, Region region, Point start);
};

/// Exact endpoint counts of all n-step walks of a model.
struct CountTable {
  int n = 0;
  std::map<Point, BigInt> counts;

  BigInt at(Point p) const;
  BigInt total() const;
};

/// Counts for every length 0..n_max. Each layer may be split over `threads`
/// workers; the result does not depend on the thread count.
std::vector<CountTable> count_walks_upto(const WalkModel& model, int n_max, unsigned threads = 1);
CountTable count_walks(const WalkModel& model, int n, unsigned threads = 1);

/// Length generating function of walks ending at `endpoint`, to order N.
ScalarSeries endpoint_series(const WalkModel& model, Point endpoint, std::size_t order);

/// Full series sum c_{i,j}(n) x^i y^j t^n, to order N.
SeriesT generating_series(const WalkModel& model, std::size_t order);

BigInt total_count(const WalkModel& model, int n);

/// Fast diagnostic path: total_count(n) / |steps|^n for n = 0..n_max in
/// double precision. Not exact; never used for verification.
std::vector<double> normalized_totals(const WalkModel& model, int n_max, unsigned threads = 1);

/// total_count(n) mod p for n = 0..n_max, p < 2^62.
std::vector<std::uint64_t> total_counts_mod(const WalkModel& model, int n_max, std::uint64_t p);

void to_json(nlohmann::json& j, const CountTable& table);
void from_json(const nlohmann::json& j, CountTable& table);

}  // namespace walks
