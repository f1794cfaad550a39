#pragma once

#include "orbitint/interval.hpp"
#include "orbitint/numeric.hpp"

#include <map>
#include <optional>
#include <string>

namespace orbitint {

/// An exact real of the form  sum_i c_i * log(a_i)  with rational c_i and
/// integers a_i > 1. Heights, local distances and bound formulas are all of
/// this shape, so comparisons between them can be decided exactly.
class LogValue {
public:
    LogValue() = default;

    /// log n, n > 0.
    static LogValue log_of(const Integer& n);
    /// log q, q > 0.
    static LogValue log_of(const Rational& q);

    const std::map<Integer, Rational>& terms() const { return terms_; }
    bool is_structurally_zero() const { return terms_.empty(); }

    LogValue& operator+=(const LogValue& rhs);
    LogValue& operator-=(const LogValue& rhs);
    LogValue& operator*=(const Rational& scale);
    friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
    friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
    friend LogValue operator*(LogValue a, const Rational& s) { return a *= s; }
    friend LogValue operator*(const Rational& s, LogValue a) { return a *= s; }
    LogValue operator-() const { return *this * Rational(-1); }

    Interval to_interval(mpfr_prec_t precision = kDefaultPrecision) const;
    double to_double() const;

    /// Exact sign (-1, 0, +1). Decided by clearing coefficient denominators and
    /// comparing two integer products; returns nullopt if those products would
    /// exceed `bit_budget` bits.
    std::optional<int> exact_sign(std::size_t bit_budget = std::size_t{1} << 26) const;

    /// Human-readable form, e.g. "log(8) - 1/2*log(3)".
    std::string to_string() const;

private:
    void add_term(const Integer& arg, const Rational& coeff);

    std::map<Integer, Rational> terms_;  // arg > 1, coeff != 0
};

/// Sign of (a - b): interval first at `precision`, exact fallback when the
/// enclosure straddles 0. nullopt only if both fail.
std::optional<int> compare(const LogValue& a, const LogValue& b,
                           mpfr_prec_t precision = kDefaultPrecision);

}  // namespace orbitint
