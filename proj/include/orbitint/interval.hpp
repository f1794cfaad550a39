#pragma once

#include "orbitint/numeric.hpp"

#include <mpfr.h>

#include <string>

namespace orbitint {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the true value of any
/// expression built from enclosing inputs stays enclosed.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval enclose(const Rational& value, mpfr_prec_t precision = kDefaultPrecision);
    static Interval enclose(const Rational& lo, const Rational& hi,
                            mpfr_prec_t precision = kDefaultPrecision);
    /// [lo, hi] from doubles taken as exact binary values.
    static Interval from_doubles(double lo, double hi, mpfr_prec_t precision = kDefaultPrecision);
    /// [+inf, +inf]
    static Interval positive_infinity(mpfr_prec_t precision = kDefaultPrecision);
    /// log n for n > 0.
    static Interval log_of(const Integer& n, mpfr_prec_t precision = kDefaultPrecision);
    /// log q for q > 0.
    static Interval log_of(const Rational& q, mpfr_prec_t precision = kDefaultPrecision);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator-() const;
    Interval operator*(const Interval& rhs) const;
    Interval operator*(const Rational& rhs) const;
    /// Division by an interval that does not contain 0.
    Interval operator/(const Interval& rhs) const;
    Interval operator/(const Rational& rhs) const;
    Interval& operator+=(const Interval& rhs);

    /// log of an interval with positive lower endpoint.
    Interval log() const;

    /// Intersection; throws std::logic_error when disjoint (two valid
    /// enclosures of one value can never be disjoint).
    Interval intersect(const Interval& other) const;
    /// Raises lo to 0 when negative.
    Interval clamp_nonnegative() const;
    /// [min lo, min hi] and [max lo, max hi].
    static Interval min(const Interval& a, const Interval& b);
    static Interval max(const Interval& a, const Interval& b);
    /// [min lo, max hi]
    static Interval hull(const Interval& a, const Interval& b);

    double lo() const;  // rounded down
    double hi() const;  // rounded up
    double mid() const;
    double width() const;  // rounded up
    double radius() const;

    bool contains(double x) const;
    bool contains(const Rational& x) const;
    /// lo >= other.hi
    bool certainly_ge(const Interval& other) const;
    /// hi < other.lo
    bool certainly_lt(const Interval& other) const;
    bool lo_positive() const;

    mpfr_srcptr lo_ptr() const { return lo_; }
    mpfr_srcptr hi_ptr() const { return hi_; }

    std::string to_string(int digits = 17) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace orbitint
