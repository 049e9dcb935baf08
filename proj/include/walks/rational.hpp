#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace walks {

using BigInt = mpz_class;

/// Exact fraction. GMP keeps every arithmetic result canonical
/// (gcd(num, den) = 1, den > 0, zero stored as 0/1).
using Rational = mpq_class;

/// Builds p/q in lowest terms. Throws std::domain_error when q == 0.
Rational make_rational(const BigInt& p, const BigInt& q = 1);
Rational make_rational(long p, long q);

/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// Throws std::domain_error if r is not an integer.
BigInt to_integer(const Rational& r);

BigInt binomial(long n, long k);

}  // namespace walks
