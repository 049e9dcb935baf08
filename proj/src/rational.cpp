#include "walks/rational.hpp"

#include <stdexcept>

namespace walks {

Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(long p, long q) { return make_rational(BigInt(p), BigInt(q)); }

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  BigInt num, den(1);
  auto slash = text.find('/');
  std::string head(trim(text.substr(0, slash)));
  if (head.empty() || num.set_str(head, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    std::string tail(trim(text.substr(slash + 1)));
    if (tail.empty() || den.set_str(tail, 10) != 0)
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.get_str());
  return r.get_num();
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace walks
