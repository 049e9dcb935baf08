#include "walks/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace walks {

// ---------------------------------------------------------------- LaurentPoly1

LaurentPoly1::LaurentPoly1(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

LaurentPoly1 LaurentPoly1::monomial(const Rational& c, int exponent) {
  LaurentPoly1 p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly1 LaurentPoly1::from_coeffs(int low, std::vector<Rational> coeffs) {
  LaurentPoly1 p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

void LaurentPoly1::normalize() {
  std::size_t first = 0;
  while (first < c_.size() && sgn(c_[first]) == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (sgn(c_[last - 1]) == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(last), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

Rational LaurentPoly1::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

std::size_t LaurentPoly1::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) != 0; }));
}

LaurentPoly1 LaurentPoly1::inverted() const {
  if (c_.empty()) return {};
  LaurentPoly1 p;
  p.c_.assign(c_.rbegin(), c_.rend());
  p.low_ = -high();
  return p;
}

LaurentPoly1 LaurentPoly1::shifted(int k) const {
  LaurentPoly1 p = *this;
  if (!p.c_.empty()) p.low_ += k;
  return p;
}

Rational LaurentPoly1::evaluate(const Rational& x) const {
  if (c_.empty()) return 0;
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  if (low_ == 0) return acc;
  if (sgn(x) == 0) throw std::domain_error("evaluating a Laurent polynomial with negative powers at 0");
  Rational scale = 1;
  Rational base = low_ > 0 ? x : Rational(1 / x);
  for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  return acc * scale;
}

void LaurentPoly1::add_scaled(const LaurentPoly1& o, int sign) {
  if (o.c_.empty()) return;
  if (c_.empty()) {
    *this = o;
    if (sign < 0)
      for (auto& r : c_) r = -r;
    return;
  }
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    auto& dst = c_[static_cast<std::size_t>(o.low_ - low_) + k];
    if (sign > 0)
      dst += o.c_[k];
    else
      dst -= o.c_[k];
  }
  normalize();
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& r : c_) r *= s;
  return *this;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 p = *this;
  for (auto& r : p.c_) r = -r;
  return p;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  LaurentPoly1 p;
  p.low_ = a.low_ + b.low_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      p.c_[i + j] += tmp;
    }
  }
  p.normalize();
  return p;
}

std::optional<LaurentPoly1> LaurentPoly1::exact_quotient(const LaurentPoly1& a, const LaurentPoly1& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly1{};
  if (b.c_.size() > a.c_.size()) return std::nullopt;
  // Long division on the normalized (shifted to exponent 0) supports.
  std::vector<Rational> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<Rational> q(a.c_.size() - db);
  const Rational& lead = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational coef = rem[k + db] / lead;
    q[k] = coef;
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= coef * b.c_[j];
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) return std::nullopt;
  return from_coeffs(a.low_ - b.low_, std::move(q));
}

std::string to_string(const LaurentPoly1& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.low(); e <= p.high(); ++e) {
    Rational c = p.coeff(e);
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string to_string(const GaussRational& g) {
  if (sgn(g.im) == 0) return g.re.get_str();
  std::ostringstream os;
  os << g.re.get_str() << (sgn(g.im) < 0 ? "-" : "+") << Rational(abs(g.im)).get_str() << "i";
  return os.str();
}

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2::LaurentPoly2(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponent2{0, 0}, c);
}

LaurentPoly2 LaurentPoly2::monomial(const Rational& c, int i, int j) {
  LaurentPoly2 p;
  p.add_term(i, j, c);
  return p;
}

Rational LaurentPoly2::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::add_term(int i, int j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::pair<int, int> LaurentPoly2::x_range() const {
  if (terms_.empty()) return {0, 0};
  return {terms_.begin()->first.first, terms_.rbegin()->first.first};
}

std::pair<int, int> LaurentPoly2::y_range() const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first.second, hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e.second);
    hi = std::max(hi, e.second);
  }
  return {lo, hi};
}

LaurentPoly2 LaurentPoly2::shifted(int di, int dj) const {
  if (di == 0 && dj == 0) return *this;
  LaurentPoly2 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), Exponent2{e.first + di, e.second + dj}, c);
  return p;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 p;
  if (a.is_zero() || b.is_zero()) return p;
  Rational tmp;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = p.terms_.try_emplace({ea.first + eb.first, ea.second + eb.second}, tmp);
      if (!inserted) it->second += tmp;
    }
  }
  for (auto it = p.terms_.begin(); it != p.terms_.end();) {
    if (sgn(it->second) == 0)
      it = p.terms_.erase(it);
    else
      ++it;
  }
  return p;
}

std::optional<LaurentPoly2> LaurentPoly2::exact_quotient(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (!b.is_monomial()) return std::nullopt;
  const auto& [e, c] = *b.terms_.begin();
  LaurentPoly2 q = a.shifted(-e.first, -e.second);
  q *= Rational(1 / c);
  return q;
}

}  // namespace walks
