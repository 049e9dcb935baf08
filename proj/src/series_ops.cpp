#include "walks/series_ops.hpp"

#include <cstdlib>
#include <sstream>

namespace walks {

namespace {

bool keep_exponent(int e, const Part& part) {
  switch (part.mode) {
    case Part::Mode::Positive: return e > 0;
    case Part::Mode::Negative: return e < 0;
    case Part::Mode::NonNeg: return e >= 0;
    case Part::Mode::NonPos: return e <= 0;
    case Part::Mode::Coeff: return e == part.k;
  }
  return false;
}

}  // namespace

SeriesT extract_part(const SeriesT& a, Var var, Part part) {
  return a.map([&](const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) {
      int mine = var == Var::X ? e.first : e.second;
      if (!keep_exponent(mine, part)) continue;
      if (part.mode == Part::Mode::Coeff) {
        if (var == Var::X)
          out.add_term(0, e.second, c);
        else
          out.add_term(e.first, 0, c);
      } else {
        out.add_term(e.first, e.second, c);
      }
    }
    return out;
  });
}

UniSeries extract_part(const UniSeries& a, Part part) {
  return a.map([&](const LaurentPoly1& p) {
    if (p.is_zero()) return LaurentPoly1{};
    std::vector<Rational> out;
    int low = p.low();
    if (part.mode == Part::Mode::Coeff) return LaurentPoly1(p.coeff(part.k));
    out.reserve(p.dense().size());
    for (int e = p.low(); e <= p.high(); ++e) out.push_back(keep_exponent(e, part) ? p.coeff(e) : Rational(0));
    return LaurentPoly1::from_coeffs(low, std::move(out));
  });
}

SeriesT substitute_inverse(const SeriesT& a, Var var) {
  return a.map([&](const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) {
      if (var == Var::X)
        out.add_term(-e.first, e.second, c);
      else
        out.add_term(e.first, -e.second, c);
    }
    return out;
  });
}

UniSeries substitute_inverse(const UniSeries& a) {
  return a.map([](const LaurentPoly1& p) { return p.inverted(); });
}

SeriesT swap_xy(const SeriesT& a) {
  return a.map([](const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term(e.second, e.first, c);
    return out;
  });
}

SeriesT times_monomial(const SeriesT& a, int di, int dj) {
  return a.map([&](const LaurentPoly2& p) { return p.shifted(di, dj); });
}

UniSeries times_monomial(const UniSeries& a, int di) {
  return a.map([&](const LaurentPoly1& p) { return p.shifted(di); });
}

SeriesT laurent_series(std::vector<LaurentPoly2> by_power, std::size_t order) {
  return SeriesT::polynomial(std::move(by_power), order).truncated(order);
}

UniSeries laurent_series(std::vector<LaurentPoly1> by_power, std::size_t order) {
  return UniSeries::polynomial(std::move(by_power), order).truncated(order);
}

UniSeries to_uni(const SeriesT& a, Var keep) {
  return a.map([&](const LaurentPoly2& p) {
    LaurentPoly1 out;
    for (const auto& [e, c] : p.terms()) {
      int drop = keep == Var::X ? e.second : e.first;
      int mine = keep == Var::X ? e.first : e.second;
      if (drop != 0) throw SeriesError("to_uni: series depends on the dropped variable");
      out += LaurentPoly1::monomial(c, mine);
    }
    return out;
  });
}

SeriesT from_uni(const UniSeries& a, Var as) {
  return a.map([&](const LaurentPoly1& p) {
    LaurentPoly2 out;
    if (p.is_zero()) return out;
    for (int e = p.low(); e <= p.high(); ++e) {
      Rational c = p.coeff(e);
      if (as == Var::X)
        out.add_term(e, 0, c);
      else
        out.add_term(0, e, c);
    }
    return out;
  });
}

ScalarSeries to_scalar(const UniSeries& a) {
  return a.map([](const LaurentPoly1& p) {
    if (!p.is_constant()) throw SeriesError("to_scalar: coefficient depends on x");
    return p.coeff(0);
  });
}

UniSeries from_scalar(const ScalarSeries& a) {
  return a.map([](const Rational& r) { return LaurentPoly1(r); });
}

ScalarSeries coefficient(const UniSeries& a, int k) {
  return a.map([&](const LaurentPoly1& p) { return p.coeff(k); });
}

ScalarSeries coefficient(const SeriesT& a, int i, int j) {
  return a.map([&](const LaurentPoly2& p) { return p.coeff(i, j); });
}

UniSeries substitute_x_times_t(const UniSeries& a) {
  const std::size_t n = a.order();
  UniSeries out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const LaurentPoly1& p = a[k];
    if (p.is_zero()) continue;
    if (p.low() < 0) throw SeriesError("x -> x t with negative powers of x");
    for (int e = p.low(); e <= p.high(); ++e) {
      std::size_t target = k + static_cast<std::size_t>(e);
      if (target >= n) break;
      out.at(target) += LaurentPoly1::monomial(p.coeff(e), e);
    }
  }
  return out;
}

UniSeries substitute_sqrt(const UniSeries& a, int offset) {
  return a.map([&](const LaurentPoly1& p) {
    LaurentPoly1 out;
    if (p.is_zero()) return out;
    for (int e = p.low(); e <= p.high(); ++e) {
      Rational c = p.coeff(e);
      if (sgn(c) == 0) continue;
      if ((e + offset) % 2 != 0) throw SeriesError("substitute_sqrt: exponent parity mismatch");
      out += LaurentPoly1::monomial(c, (e + offset) / 2);
    }
    return out;
  });
}

ScalarSeries evaluate_at(const UniSeries& a, const Rational& value) {
  return a.map([&](const LaurentPoly1& p) { return p.evaluate(value); });
}

int support_excess(const SeriesT& a, int x0, int y0) {
  int worst = -1 << 20;
  for (std::size_t n = 0; n < a.order(); ++n) {
    for (const auto& [e, c] : a[n].terms()) {
      int r = std::max(std::abs(e.first - x0), std::abs(e.second - y0)) - static_cast<int>(n);
      worst = std::max(worst, r);
    }
  }
  return worst;
}

std::string to_text(const SeriesT& a) {
  std::ostringstream os;
  for (std::size_t n = 0; n < a.order(); ++n)
    for (const auto& [e, c] : a[n].terms())
      os << "t^" << n << " x^" << e.first << " y^" << e.second << " : " << c.get_str() << "\n";
  os << "O(t^" << a.order() << ")\n";
  return os.str();
}

std::string to_text(const UniSeries& a) {
  std::ostringstream os;
  for (std::size_t n = 0; n < a.order(); ++n) {
    const LaurentPoly1& p = a[n];
    if (p.is_zero()) continue;
    for (int e = p.low(); e <= p.high(); ++e) {
      Rational c = p.coeff(e);
      if (sgn(c) != 0) os << "t^" << n << " x^" << e << " : " << c.get_str() << "\n";
    }
  }
  os << "O(t^" << a.order() << ")\n";
  return os.str();
}

std::string to_text(const ScalarSeries& a) {
  std::ostringstream os;
  for (std::size_t n = 0; n < a.order(); ++n)
    if (sgn(a[n]) != 0) os << "t^" << n << " : " << a[n].get_str() << "\n";
  os << "O(t^" << a.order() << ")\n";
  return os.str();
}

}  // namespace walks
