#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace orbitint {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0

/// Parses "a" or "a/b" (optional sign, decimal digits). Throws ValidationError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Number of bits in |n| (0 for n = 0).
std::size_t bit_length(const Integer& n);

inline Integer abs_value(const Integer& n) { return n < 0 ? Integer(-n) : n; }
inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent);

/// num/den in lowest terms (den != 0).
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace orbitint
