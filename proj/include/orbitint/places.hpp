#pragma once

#include "orbitint/log_value.hpp"
#include "orbitint/numeric.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace orbitint {

/// A place of Q: the archimedean place or the p-adic place for a prime p.
class Place {
public:
    enum class Kind { Infinity, Finite };

    static Place infinity() { return Place(); }
    /// Throws ValidationError unless p is prime.
    static Place prime(const Integer& p);
    /// "inf" or "p<prime>".
    static Place parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_archimedean() const { return kind_ == Kind::Infinity; }
    /// Only meaningful for finite places.
    const Integer& p() const { return p_; }
    /// [Q_v : Q] / [Q : Q]; always 1 over Q.
    Rational local_degree() const { return Rational(1); }
    /// 2 at the archimedean place, 1 otherwise.
    int lv() const { return is_archimedean() ? 2 : 1; }

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    /// Infinity sorts first, then primes ascending.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    Kind kind_ = Kind::Infinity;
    Integer p_ = 0;
};

/// Finite set of places, sorted and without duplicates.
class PlaceSet {
public:
    PlaceSet() = default;
    explicit PlaceSet(std::vector<Place> places);
    static PlaceSet parse(const std::vector<std::string>& names);

    const std::vector<Place>& places() const { return places_; }
    std::size_t size() const { return places_.size(); }
    bool contains(const Place& v) const;
    bool contains_infinity() const;
    std::vector<std::string> names() const;

    auto begin() const { return places_.begin(); }
    auto end() const { return places_.end(); }

private:
    std::vector<Place> places_;
};

/// log|x|_v, or -infinity for x = 0.
struct ExtendedLog {
    enum class Kind { Finite, MinusInfinity, PlusInfinity };
    Kind kind = Kind::Finite;
    LogValue value;

    static ExtendedLog minus_infinity() { return {Kind::MinusInfinity, {}}; }
    static ExtendedLog plus_infinity() { return {Kind::PlusInfinity, {}}; }
    bool is_finite() const { return kind == Kind::Finite; }
};

/// v_p(n) for n != 0.
long padic_valuation(const Integer& n, const Integer& p);
/// v_p(num) - v_p(den). Throws ValidationError for x = 0.
long padic_valuation(const Rational& x, const Integer& p);

/// log|x|_v: log of the real absolute value at infinity, -v_p(x) log p at p.
ExtendedLog abs_log(const Rational& x, const Place& v);

/// log max(|x|_v, 1).
LogValue log_plus(const Rational& x, const Place& v);

/// True iff every prime dividing the denominator of x lies in S.
/// Requires S to contain the infinite place.
bool is_s_integer(const Rational& x, const PlaceSet& s);

}  // namespace orbitint
