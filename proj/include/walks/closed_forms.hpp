#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "walks/rational.hpp"
#include "walks/walk_oracle.hpp"

namespace walks {

/// Product a (a+1) ... (a+n-1); 1 for n = 0.
Rational rising_factorial(const Rational& a, long n);

/// Square-step quadrant walks from (0,0) to (i,j) of length n. Zero when the
/// parity of n differs from i + j or n < i + j. Throws on negative i or j.
BigInt quadrant_square_count(long i, long j, long n);

/// Diagonal-step quadrant walks from (0,0) to (i,j) of length n. Zero unless
/// i, j, n share a parity.
BigInt quadrant_diag_count(long i, long j, long n);

/// Gessel walks of length 2n from (0,0) back to (0,0).
BigInt gessel_count(long n);

/// (a)_{n + shift}.
struct ShiftedParam {
  Rational a;
  int shift = 0;
};

/// prefactor(n) * base^n * prod (a)_{n+s} / prod (b)_{n+s}.
struct HypTermSpec {
  std::vector<Rational> prefactor;  // ascending coefficients in n
  Rational base = 1;
  std::vector<ShiftedParam> numerator;
  std::vector<ShiftedParam> denominator;

  /// Throws std::domain_error if a denominator factor vanishes.
  Rational evaluate(long n) const;
};

/// A closed form for walks of even length 2n between two points.
struct ClosedFormEntry {
  std::string id;
  std::string anchor;
  std::string lattice;  // "square" | "diagonal"
  Region region = Region::ThreeQuadrant;
  Point start;
  Point endpoint;
  std::vector<HypTermSpec> terms;

  WalkModel model() const;
  /// Exact sum of the terms at index n (walk length 2n).
  Rational evaluate(long n) const;
};

class ClosedFormCatalog {
 public:
  ClosedFormCatalog() = default;
  explicit ClosedFormCatalog(std::vector<ClosedFormEntry> entries);

  static ClosedFormCatalog load(const std::filesystem::path& path);
  /// The shipped catalog, loaded once from data_dir().
  static const ClosedFormCatalog& builtin();

  const std::vector<ClosedFormEntry>& entries() const { return entries_; }
  /// Throws std::invalid_argument for an unknown id.
  const ClosedFormEntry& find(const std::string& id) const;

 private:
  std::vector<ClosedFormEntry> entries_;
};

/// Value at index n (walk length 2n). The result must be an integer; a
/// non-integer value throws std::domain_error.
BigInt eval_closed_form(const ClosedFormEntry& entry, long n);
BigInt eval_closed_form(const std::string& id, long n);

/// Value at walk length `length`; throws std::invalid_argument when the
/// length is odd.
BigInt eval_closed_form_at_length(const ClosedFormEntry& entry, long length);

void to_json(nlohmann::json& j, const HypTermSpec& t);
void from_json(const nlohmann::json& j, HypTermSpec& t);
void to_json(nlohmann::json& j, const ClosedFormEntry& e);
void from_json(const nlohmann::json& j, ClosedFormEntry& e);
void to_json(nlohmann::json& j, const ClosedFormCatalog& c);
void from_json(const nlohmann::json& j, ClosedFormCatalog& c);

}  // namespace walks
