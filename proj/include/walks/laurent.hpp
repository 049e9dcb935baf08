#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walks/rational.hpp"

namespace walks {

/// Element of Q[x, 1/x]. Stored densely between the lowest and highest
/// nonzero exponent; the zero polynomial has no storage.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  LaurentPoly1(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly1(long c) : LaurentPoly1(Rational(c)) {}  // NOLINT

  static LaurentPoly1 monomial(const Rational& c, int exponent);
  static LaurentPoly1 from_coeffs(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }
  bool is_monomial() const { return c_.size() == 1; }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined on zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int e) const;
  /// Number of nonzero terms.
  std::size_t term_count() const;
  const std::vector<Rational>& dense() const { return c_; }

  /// x -> 1/x.
  LaurentPoly1 inverted() const;
  /// Multiplies by x^k.
  LaurentPoly1 shifted(int k) const;
  Rational evaluate(const Rational& x) const;

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const Rational& s);
  LaurentPoly1 operator-() const;

  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  friend LaurentPoly1 operator*(LaurentPoly1 a, const Rational& s) { return a *= s; }
  friend LaurentPoly1 operator*(const Rational& s, LaurentPoly1 a) { return a *= s; }
  friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  /// Exact quotient a / b in Q[x, 1/x]; nullopt when b does not divide a.
  static std::optional<LaurentPoly1> exact_quotient(const LaurentPoly1& a, const LaurentPoly1& b);

 private:
  void normalize();
  void add_scaled(const LaurentPoly1& o, int sign);

  int low_ = 0;
  std::vector<Rational> c_;
};

using Exponent2 = std::pair<int, int>;

/// Element of Q[x, 1/x, y, 1/y]: finite map (i, j) -> nonzero Rational.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exponent2, Rational>;

  LaurentPoly2() = default;
  LaurentPoly2(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly2(long c) : LaurentPoly2(Rational(c)) {}  // NOLINT

  static LaurentPoly2 monomial(const Rational& c, int i, int j);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Terms& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  /// Degree bounds; {0, 0} for the zero polynomial.
  std::pair<int, int> x_range() const;
  std::pair<int, int> y_range() const;

  LaurentPoly2 shifted(int di, int dj) const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Rational& s);
  LaurentPoly2 operator-() const;

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Rational& s) { return a *= s; }
  friend LaurentPoly2 operator*(const Rational& s, LaurentPoly2 a) { return a *= s; }
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

  /// Only monomial divisors are supported; nullopt otherwise.
  static std::optional<LaurentPoly2> exact_quotient(const LaurentPoly2& a, const LaurentPoly2& b);

 private:
  Terms terms_;
};

/// Q(i) element, used for the kernel-method series with constant term +-i.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(const Rational& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRational(long r) : re(r) {}             // NOLINT
  GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }
  GaussRational operator-() const { return {-re, -im}; }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator*(GaussRational a, const Rational& s) { return a *= s; }
  friend GaussRational operator*(const Rational& s, GaussRational a) { return a *= s; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Uniform interface the series template needs from a coefficient ring.
template <class C>
struct Ring;

template <>
struct Ring<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static std::optional<Rational> exact_quotient(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) return std::nullopt;
    return Rational(a / b);
  }
};

template <>
struct Ring<LaurentPoly1> {
  static LaurentPoly1 zero() { return {}; }
  static LaurentPoly1 one() { return LaurentPoly1(1); }
  static bool is_zero(const LaurentPoly1& a) { return a.is_zero(); }
  static std::optional<LaurentPoly1> exact_quotient(const LaurentPoly1& a, const LaurentPoly1& b) {
    return LaurentPoly1::exact_quotient(a, b);
  }
};

template <>
struct Ring<LaurentPoly2> {
  static LaurentPoly2 zero() { return {}; }
  static LaurentPoly2 one() { return LaurentPoly2(1); }
  static bool is_zero(const LaurentPoly2& a) { return a.is_zero(); }
  static std::optional<LaurentPoly2> exact_quotient(const LaurentPoly2& a, const LaurentPoly2& b) {
    return LaurentPoly2::exact_quotient(a, b);
  }
};

template <>
struct Ring<GaussRational> {
  static GaussRational zero() { return {}; }
  static GaussRational one() { return GaussRational(1); }
  static bool is_zero(const GaussRational& a) { return a.is_zero(); }
  static std::optional<GaussRational> exact_quotient(const GaussRational& a, const GaussRational& b) {
    Rational norm = b.re * b.re + b.im * b.im;
    if (sgn(norm) == 0) return std::nullopt;
    GaussRational q = a * GaussRational(b.re, -b.im);
    q.re /= norm;
    q.im /= norm;
    return q;
  }
};

std::string to_string(const LaurentPoly1& p, const char* var = "x");
std::string to_string(const GaussRational& g);

}  // namespace walks
