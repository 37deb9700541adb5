#pragma once

// Thin helpers over GMP integers and rationals shared by every module.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

Integer ipow(const Integer& base, unsigned long exp);
// Integer powers of a rational; negative exponents invert (base must be nonzero then).
Rational rpow(const Rational& base, long exp);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

// Round to the grid 2^-bits, towards -inf / +inf.
Rational dyadic_floor(const Rational& x, long bits);
Rational dyadic_ceil(const Rational& x, long bits);
Rational pow2(long e);

// Bounds on the real n-th root of x >= 0 on the grid 2^-bits.
Rational root_lower(const Rational& x, unsigned long n, long bits);
Rational root_upper(const Rational& x, unsigned long n, long bits);

// Exact n-th root when x is a perfect n-th power (x >= 0, or n odd).
std::optional<Integer> exact_root(const Integer& x, unsigned long n);
std::optional<Rational> exact_root(const Rational& x, unsigned long n);

// Height of a rational a/b in lowest terms: max(|a|, |b|).
Integer rational_height(const Rational& x);

// p-adic valuation of a nonzero integer.
long valuation(const Integer& x, const Integer& p);

// Prime factorization of |x| (x != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<Integer, long>> factor_integer(const Integer& x);

bool is_probable_prime(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Parses "a" or "a/b" with optional sign; throws ParseError.
Rational parse_rational(const std::string& text);

// Decimal text with `digits` fractional digits, rounded towards -inf (round_up false) or +inf.
std::string to_decimal(const Rational& x, int digits, bool round_up = false);

// Approximate value of a rational as a double (for diagnostics and log-scale bounds only).
double to_double(const Rational& x);

} // namespace mahler
