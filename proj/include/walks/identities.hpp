#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walks/algebraic.hpp"
#include "walks/decompose.hpp"

namespace walks {

/// One side-by-side comparison inside an identity. Negative checks
/// (expect_equal = false) pass when the two sides differ below the order.
struct IdentityCheck {
  std::string name;
  SeriesT lhs;
  SeriesT rhs;
  bool expect_equal = true;
  /// Known-term checks compare only this many orders.
  std::size_t max_order = static_cast<std::size_t>(-1);
};

struct FirstFailure {
  std::string check;
  std::size_t t = 0;
  int i = 0;
  int j = 0;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  std::string id;
  std::string anchor;
  std::size_t order_checked = 0;
  std::size_t checks = 0;
  bool pass = false;
  std::optional<FirstFailure> failure;
};

struct IdentityCase {
  std::string id;
  std::string anchor;
  /// Kernel-root substitutions; the suite runs these at a lower order.
  bool heavy = false;
  std::function<std::vector<IdentityCheck>(std::size_t order)> builder;
};

const std::vector<IdentityCase>& identity_catalog();
const IdentityCase& identity_case(const std::string& id);

/// Compares every check to t^order. Throws std::out_of_range for an
/// unknown id.
Verdict verify(const std::string& id, std::size_t order);
Verdict verify(const IdentityCase& c, std::size_t order);
/// First differing monomial, ordered by t-power then (i, j).
std::optional<FirstFailure> compare(const IdentityCheck& check, std::size_t order);

/// Suite order for an entry: `order` for light entries, `heavy_order` for
/// kernel-substitution ones. Entries run in parallel; output order follows
/// `ids`.
std::vector<Verdict> verify_all(const std::vector<std::string>& ids, std::size_t order, std::size_t heavy_order,
                                unsigned threads = 0);

void to_json(nlohmann::json& j, const Verdict& v);
std::string format_table(const std::vector<Verdict>& verdicts);

/// Boundary constants read off the DP decomposition: S1 = [x^1] S(x) and
/// P0 = [x^0] Delta S(x) S(1/x) on the square lattice, S1 and
/// F0 = P0 - S(-1) on the diagonal lattice, all from the origin.
struct BoundaryValues {
  ScalarSeries s1_square;
  ScalarSeries p0_square;
  ScalarSeries s1_diagonal;
  ScalarSeries f0_diagonal;
};
BoundaryValues boundary_values_from_walks(std::size_t order);

// ---------------------------------------------------------------- reflection

struct ReflectResult {
  bool pass = false;
  BigInt forward;    // c_{i,j}(n)
  BigInt backward;   // c_{j,i}(n)
  BigInt wedge;      // Gessel wedge count at the reflected point
  Point wedge_point;
  std::string detail;
};

/// c_{i,j}(n) - c_{j,i}(n) against the wedge count: from (-1,0) on the square
/// lattice (wedge point (-i-1, j)), from (-2,0) on the diagonal lattice
/// (wedge point ((i+j)/2 + 1, (j-i)/2 - 1)). Requires j >= 0, i < j, n >= 0,
/// and i + j even on the diagonal lattice; throws std::invalid_argument
/// otherwise.
ReflectResult reflect_check(Lattice lattice, int i, int j, int n);

/// Every admissible (i, j) reachable in at most n_max steps; returns the
/// first failure, or nullopt.
std::optional<ReflectResult> reflect_check_upto(Lattice lattice, int n_max);

struct GesselSeries {
  UniSeries axis;      // G(x, 0)
  UniSeries diagonal;  // sum g_{-j,j}(n) x^j t^n
  bool matches_direct = false;
};

/// G(x,0) = L(x,0) - B(0,x) from the square walks started at (-1,0), and
/// G_diag(x) = x^(-1/2) (L(sqrt x, 0) - B(0, sqrt x)) from the diagonal walks
/// started at (-2,0), compared with a direct wedge DP.
GesselSeries gessel_series_from_three_quadrants(std::size_t order);
/// The same two specializations read off the wedge DP.
std::pair<UniSeries, UniSeries> gessel_series_direct(std::size_t order);

}  // namespace walks
