#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace absorb {

// Arbitrary-precision rational, canonical form maintained by GMP:
// positive denominator, gcd(num, den) = 1, zero stored as 0/1.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational abs_of(const Rational& q) { return abs(q); }

inline double to_double(const Rational& q) { return q.get_d(); }

// 10^e as an exact rational, e may be negative.
Rational pow10(int e);

BigInt floor_to_int(const Rational& q);

// Nearest integer, half away from zero.
BigInt round_to_int(const Rational& q);

// Accepts "p/q", plain integers, and exact decimal/scientific forms
// such as "0.25" or "1e-3" (all of which are exact rationals).
std::optional<Rational> parse_rational(const std::string& text);

// Integer or "p/q" only; the form used for game data on disk.
std::optional<Rational> parse_rational_strict(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

// Correctly rounded decimal rendering with the given number of
// significant digits; presentation only, never fed back into math.
std::string decimal_string(const Rational& q, int significant_digits = 10);

}  // namespace absorb
