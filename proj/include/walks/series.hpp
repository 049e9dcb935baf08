#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walks/laurent.hpp"

namespace walks {

/// Raised when an operation would need to divide by a non-unit or leave
/// the ring of power series.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series in t with coefficients in C. Coefficients are
/// valid for t^n with n < order(); every binary operation returns the
/// minimum of its operands' orders.
template <class C>
class Series {
 public:
  using Coeff = C;

  Series() = default;
  explicit Series(std::size_t order) : c_(order, Ring<C>::zero()) {}
  explicit Series(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

  /// Polynomial in t, truncated at `order`.
  static Series polynomial(std::vector<C> coeffs, std::size_t order) {
    coeffs.resize(order, Ring<C>::zero());
    return Series(std::move(coeffs));
  }
  static Series constant(const C& c, std::size_t order) { return polynomial({c}, order); }
  static Series monomial(const C& c, std::size_t power, std::size_t order) {
    Series s(order);
    if (power < order) s.c_[power] = c;
    return s;
  }

  std::size_t order() const { return c_.size(); }
  const C& operator[](std::size_t n) const { return c_[n]; }
  const std::vector<C>& coeffs() const { return c_; }

  /// Construction-time mutation; values are treated as immutable once shared.
  void set(std::size_t n, C v) { c_[n] = std::move(v); }
  C& at(std::size_t n) { return c_[n]; }

  /// Index of the first nonzero coefficient, or order() if none.
  std::size_t valuation() const {
    for (std::size_t n = 0; n < c_.size(); ++n)
      if (!Ring<C>::is_zero(c_[n])) return n;
    return c_.size();
  }
  bool is_zero() const { return valuation() == c_.size(); }

  Series truncated(std::size_t order) const {
    if (order >= c_.size()) return *this;
    return Series(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  /// Multiplies by t^k (k >= 0); the truncation order grows by k.
  Series shifted(std::size_t k) const {
    std::vector<C> out(k, Ring<C>::zero());
    out.insert(out.end(), c_.begin(), c_.end());
    return Series(std::move(out));
  }

  /// Divides by t^k; the first k coefficients must vanish.
  Series unshifted(std::size_t k) const {
    if (k > c_.size()) throw SeriesError("unshift beyond truncation order");
    for (std::size_t n = 0; n < k; ++n)
      if (!Ring<C>::is_zero(c_[n])) throw SeriesError("series not divisible by t^" + std::to_string(k));
    return Series(std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(c_[0]))>;
    std::vector<D> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Series<D>(std::move(out));
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    Series out = a.truncated(n);
    for (std::size_t k = 0; k < n; ++k) out.c_[k] += b.c_[k];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    Series out = a.truncated(n);
    for (std::size_t k = 0; k < n; ++k) out.c_[k] -= b.c_[k];
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    const std::size_t va = a.valuation(), vb = b.valuation();
    for (std::size_t i = va; i < n; ++i) {
      if (Ring<C>::is_zero(a.c_[i])) continue;
      for (std::size_t j = vb; i + j < n; ++j) {
        if (Ring<C>::is_zero(b.c_[j])) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  friend Series operator*(const Series& a, const Rational& s) {
    Series out = a;
    for (auto& c : out.c_) c = c * s;
    return out;
  }
  friend Series operator*(const Rational& s, const Series& a) { return a * s; }
  /// Multiplies every coefficient by a fixed ring element.
  Series scaled(const C& s) const {
    Series out = *this;
    for (auto& c : out.c_) c = c * s;
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

/// Index of the first coefficient where a and b differ, compared up to the
/// smaller of the two orders; nullopt when they agree.
template <class C>
std::optional<std::size_t> first_difference(const Series<C>& a, const Series<C>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k < n; ++k)
    if (!(a[k] == b[k])) return k;
  return std::nullopt;
}

template <class C>
bool agrees(const Series<C>& a, const Series<C>& b) {
  return !first_difference(a, b).has_value();
}

/// Multiplicative inverse; the constant term must be a unit of C.
template <class C>
Series<C> inverse(const Series<C>& a) {
  const std::size_t n = a.order();
  Series<C> out(n);
  if (n == 0) return out;
  auto inv0 = Ring<C>::exact_quotient(Ring<C>::one(), a[0]);
  if (!inv0) throw SeriesError("series inverse: constant term is not a unit");
  out.set(0, *inv0);
  for (std::size_t k = 1; k < n; ++k) {
    C acc = Ring<C>::zero();
    for (std::size_t j = 1; j <= k; ++j) {
      if (Ring<C>::is_zero(a[j])) continue;
      acc += a[j] * out[k - j];
    }
    out.set(k, -(acc * *inv0));
  }
  return out;
}

/// Quotient a / b where b = t^v (b_v + ...) and b_v need not be a unit:
/// each coefficient is obtained by exact division in C, which fails when the
/// quotient is not a power series over C. The result loses v orders.
template <class C>
Series<C> divide(const Series<C>& a, const Series<C>& b) {
  const std::size_t v = b.valuation();
  if (v == b.order()) throw SeriesError("series division by zero (to truncation order)");
  const std::size_t n_in = std::min(a.order(), b.order());
  for (std::size_t k = 0; k < std::min(v, n_in); ++k)
    if (!Ring<C>::is_zero(a[k]))
      throw SeriesError("series division: quotient has a pole at t = 0");
  const std::size_t n = n_in - v;
  Series<C> out(n);
  const C& lead = b[v];
  for (std::size_t k = 0; k < n; ++k) {
    C acc = a[k + v];
    for (std::size_t j = 0; j < k; ++j) {
      if (Ring<C>::is_zero(out[j]) || Ring<C>::is_zero(b[v + k - j])) continue;
      acc -= out[j] * b[v + k - j];
    }
    auto q = Ring<C>::exact_quotient(acc, lead);
    if (!q)
      throw SeriesError("series division: leading coefficient does not divide at order " +
                        std::to_string(k + v));
    out.set(k, std::move(*q));
  }
  return out;
}

/// Square root of a series with constant term exactly 1.
template <class C>
Series<C> sqrt(const Series<C>& a) {
  const std::size_t n = a.order();
  Series<C> out(n);
  if (n == 0) return out;
  if (!(a[0] == Ring<C>::one())) throw SeriesError("series_sqrt: constant term must be 1");
  out.set(0, Ring<C>::one());
  const Rational half(1, 2);
  for (std::size_t k = 1; k < n; ++k) {
    C acc = a[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (Ring<C>::is_zero(out[j]) || Ring<C>::is_zero(out[k - j])) continue;
      acc -= out[j] * out[k - j];
    }
    out.set(k, acc * half);
  }
  return out;
}

template <class C>
Series<C> pow(const Series<C>& a, int e) {
  if (e < 0) return pow(inverse(a), -e);
  Series<C> result = Series<C>::constant(Ring<C>::one(), a.order());
  Series<C> base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Caches successive powers g^0, g^1, ... of a series.
template <class C>
class PowerCache {
 public:
  explicit PowerCache(Series<C> g) : g_(std::move(g)) {
    powers_.push_back(Series<C>::constant(Ring<C>::one(), g_.order()));
  }
  const Series<C>& operator()(std::size_t e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * g_);
    return powers_[e];
  }
  const Series<C>& base() const { return g_; }

 private:
  Series<C> g_;
  std::vector<Series<C>> powers_;
};

/// f(g): f has coefficients in Q[x, 1/x] and g is substituted for x.
/// Negative exponents of x require g to be invertible. When g has positive
/// valuation the truncation is exact to min(f.order, g.order).
template <class C>
Series<C> compose(const Series<LaurentPoly1>& f, const Series<C>& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Series<C> out(n);
  const std::size_t vg = g.valuation();
  int lo = 0, hi = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k].is_zero()) continue;
    lo = std::min(lo, f[k].low());
    hi = std::max(hi, f[k].high());
  }
  PowerCache<C> pos(g.truncated(n));
  std::optional<PowerCache<C>> neg;
  if (lo < 0) {
    if (vg > 0) throw SeriesError("compose: negative powers of a series without unit constant term");
    neg.emplace(inverse(g.truncated(n)));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const LaurentPoly1& fk = f[k];
    if (fk.is_zero()) continue;
    for (int e = fk.low(); e <= fk.high(); ++e) {
      Rational c = fk.coeff(e);
      if (sgn(c) == 0) continue;
      if (e > 0 && vg > 0 && k + static_cast<std::size_t>(e) * vg >= n) break;
      const Series<C>& pw = e >= 0 ? pos(static_cast<std::size_t>(e)) : (*neg)(static_cast<std::size_t>(-e));
      for (std::size_t m = 0; m + k < n; ++m) {
        if (Ring<C>::is_zero(pw[m])) continue;
        out.at(m + k) += pw[m] * c;
      }
    }
  }
  return out;
}

}  // namespace walks
