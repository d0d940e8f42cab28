#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tsym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Representative of q modulo 1 in [0, 1).
Rational frac_part(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least common multiple of the denominators of the given fractions.
Integer common_denominator(const std::vector<Rational>& values);

Integer factorial(unsigned long k);

/// Non-negative residue of a modulo n (n > 0).
Integer mod_floor(const Integer& a, const Integer& n);

/// a^-1 mod n; requires gcd(a, n) == 1.
Integer mod_inverse(const Integer& a, const Integer& n);

/// True when z fits in a signed 64-bit integer.
bool fits_int64(const Integer& z);
long long to_int64(const Integer& z);

}  // namespace tsym
